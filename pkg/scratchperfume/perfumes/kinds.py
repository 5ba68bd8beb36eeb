"""The catalogue of code perfumes"""
import enum
from dataclasses import dataclass


class PerfumeKind(enum.Enum):
    """Kinds of code perfumes

    Each member carries a stable machine ``name`` (used in configuration,
    JSON and CSV output), a display ``label`` and a one sentence ``feedback``
    praising the learner. Declaration order is the reporting order.
    """

    BACKDROP_SWITCH = (
        "backdrop_switch", "Backdrop Switch",
        "Great, you react to backdrop changes that one of your scripts really makes!",
    )
    BOOLEAN_EXPRESSION = (
        "boolean_expression", "Boolean Expression",
        "Well done, you combine comparisons with Boolean operators to express a precise condition!",
    )
    COLLISION = (
        "collision", "Collision",
        "Nice, you keep checking for collisions and let the sprite react when it touches something!",
    )
    CONDITIONAL_INSIDE_LOOP = (
        "conditional_inside_loop", "Conditional Inside Loop",
        "Good job, the condition inside your loop is checked again on every repetition!",
    )
    CONTROLLED_BROADCAST_OR_STOP = (
        "controlled_broadcast_or_stop", "Controlled Broadcast Or Stop",
        "Well done, you only broadcast or stop once the condition in your loop is met!",
    )
    COORDINATION = (
        "coordination", "Coordination",
        "Great, you use a wait until block to coordinate your scripts!",
    )
    CORRECT_BROADCAST = (
        "correct_broadcast", "Correct Broadcast",
        "Great, the message you broadcast is received by a when I receive script!",
    )
    CUSTOM_BLOCK_USAGE = (
        "custom_block_usage", "Custom Block Usage",
        "Nice, you defined your own block and you use it!",
    )
    DIRECTED_MOTION = (
        "directed_motion", "Directed Motion",
        "Good job, the sprite turns to the right direction before it moves when the key is pressed!",
    )
    GLIDING_MOTION = (
        "gliding_motion", "Gliding Motion",
        "Nice, your sprite glides smoothly when the key is pressed!",
    )
    INITIALISATION_OF_LOOKS = (
        "initialisation_of_looks", "Initialisation Of Looks",
        "Well done, you set up how things look when the green flag is clicked!",
    )
    INITIALISATION_OF_POSITIONS = (
        "initialisation_of_positions", "Initialisation Of Position",
        "Well done, you set the starting position when the green flag is clicked!",
    )
    LIST_USAGE = (
        "list_usage", "List Usage",
        "Great, you use a list to keep track of several values!",
    )
    LOOP_SENSING = (
        "loop_sensing", "Loop Sensing",
        "Good job, you are continuously checking for this event inside a loop!",
    )
    MATCHING_PARAMETER = (
        "matching_parameter", "Matching Parameter",
        "Nice, every parameter your custom block uses is declared in its definition!",
    )
    MOUSE_FOLLOWER = (
        "mouse_follower", "Mouse Follower",
        "Great, your sprite keeps following the mouse pointer!",
    )
    MOVEMENT_IN_LOOP = (
        "movement_in_loop", "Movement In Loop",
        "Well done, you check for key presses inside a loop so the sprite moves smoothly!",
    )
    NESTED_CONDITIONAL_CHECKS = (
        "nested_conditional_checks", "Nested Conditional Checks",
        "Good job, you nest conditions to check one thing after another!",
    )
    NESTED_LOOPS = (
        "nested_loops", "Nested Loops Perfume",
        "Nice, you put a loop inside another loop together with other blocks!",
    )
    OBJECT_FOLLOWER = (
        "object_follower", "Object Follower",
        "Great, your sprite keeps following another sprite!",
    )
    PARALLELISATION = (
        "parallelisation", "Parallelisation",
        "Well done, several scripts start on the same event and run in parallel!",
    )
    SAY_SOUND_SYNCHRONISATION = (
        "say_sound_synchronisation", "Say Sound Synchronisation",
        "Nice, the speech bubble is shown while the sound plays and cleared afterwards!",
    )
    TIMER = (
        "timer", "Timer",
        "Great, you built a timer that changes a variable at a steady pace!",
    )
    USEFUL_POSITION_CHECK = (
        "useful_position_check", "Useful Position Check",
        "Good job, you compare the position with greater than or less than, which works reliably!",
    )
    VALID_TERMINATION = (
        "valid_termination", "Valid Termination",
        "Well done, your repeat until loop has a condition that can end it!",
    )

    def __init__(self, machine_name, label, feedback):
        self.machine_name = machine_name
        self.label = label
        self.feedback = feedback

    @classmethod
    def from_name(cls, machine_name):
        for kind in cls:
            if kind.machine_name == machine_name:
                return kind
        raise ValueError(
            f"Got perfume={machine_name!r}, expected one of {[kind.machine_name for kind in cls]}."
        )

    @property
    def order(self):
        return _ORDER[self]


_ORDER = {kind: index for index, kind in enumerate(PerfumeKind)}


@dataclass(frozen=True)
class PerfumeInstance:
    """A detected perfume occurrence

    Attributes
    ----------
    kind : PerfumeKind
    target_name : str
        sprite (or stage) holding the anchor block
    anchor_block_id : str
        id of the block the feedback points at
    detail : str
        extra context, e.g. a message, variable or custom block name
    target_index : int
        position of the target in the project, used for ordering
    """

    kind: PerfumeKind
    target_name: str
    anchor_block_id: str
    detail: str = ""
    target_index: int = 0

    @property
    def feedback(self):
        return self.kind.feedback

    def sort_key(self):
        return (self.kind.order, self.target_index, self.anchor_block_id, self.detail)
