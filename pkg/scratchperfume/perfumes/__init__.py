from .kinds import PerfumeKind, PerfumeInstance
from .exclusions import is_comparing_literals, has_nested_loop_smell
from .abstraction import find_custom_block_usage, find_list_usage, find_matching_parameter
from .control import (find_collision, find_conditional_inside_loop,
                      find_controlled_broadcast_or_stop, find_coordination, find_loop_sensing,
                      find_movement_in_loop, find_nested_conditional_checks, find_nested_loops,
                      find_timer, find_valid_termination)
from .events import (find_backdrop_switch, find_correct_broadcast,
                     find_initialisation_of_looks, find_parallelisation,
                     find_say_sound_synchronisation)
from .expressions import find_boolean_expression, find_useful_position_check
from .motion import (find_directed_motion, find_gliding_motion, find_initialisation_of_position,
                     find_mouse_follower, find_object_follower)
from .finder_dispatcher import FINDER_ZOO, available_finders, get_finders, find_all
