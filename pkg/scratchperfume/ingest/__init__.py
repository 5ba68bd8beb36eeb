from .sb3 import RawBlock, RawProject, RawTarget, load_project, parse_project
from .slots import (BlockRef, BroadcastRef, Empty, InputSlot, ListRef, Literal,
                    VariableRef, decode_input_slot)
