from .abstraction import find_custom_block_usage, find_list_usage, find_matching_parameter
from .control import (find_collision, find_conditional_inside_loop,
                      find_controlled_broadcast_or_stop, find_coordination, find_loop_sensing,
                      find_movement_in_loop, find_nested_conditional_checks, find_nested_loops,
                      find_timer, find_valid_termination)
from .events import (find_backdrop_switch, find_correct_broadcast,
                     find_initialisation_of_looks, find_parallelisation,
                     find_say_sound_synchronisation)
from .expressions import find_boolean_expression, find_useful_position_check
from .kinds import PerfumeKind
from .motion import (find_directed_motion, find_gliding_motion, find_initialisation_of_position,
                     find_mouse_follower, find_object_follower)

FINDER_ZOO = {
    PerfumeKind.BACKDROP_SWITCH.machine_name: find_backdrop_switch,
    PerfumeKind.BOOLEAN_EXPRESSION.machine_name: find_boolean_expression,
    PerfumeKind.COLLISION.machine_name: find_collision,
    PerfumeKind.CONDITIONAL_INSIDE_LOOP.machine_name: find_conditional_inside_loop,
    PerfumeKind.CONTROLLED_BROADCAST_OR_STOP.machine_name: find_controlled_broadcast_or_stop,
    PerfumeKind.COORDINATION.machine_name: find_coordination,
    PerfumeKind.CORRECT_BROADCAST.machine_name: find_correct_broadcast,
    PerfumeKind.CUSTOM_BLOCK_USAGE.machine_name: find_custom_block_usage,
    PerfumeKind.DIRECTED_MOTION.machine_name: find_directed_motion,
    PerfumeKind.GLIDING_MOTION.machine_name: find_gliding_motion,
    PerfumeKind.INITIALISATION_OF_LOOKS.machine_name: find_initialisation_of_looks,
    PerfumeKind.INITIALISATION_OF_POSITIONS.machine_name: find_initialisation_of_position,
    PerfumeKind.LIST_USAGE.machine_name: find_list_usage,
    PerfumeKind.LOOP_SENSING.machine_name: find_loop_sensing,
    PerfumeKind.MATCHING_PARAMETER.machine_name: find_matching_parameter,
    PerfumeKind.MOUSE_FOLLOWER.machine_name: find_mouse_follower,
    PerfumeKind.MOVEMENT_IN_LOOP.machine_name: find_movement_in_loop,
    PerfumeKind.NESTED_CONDITIONAL_CHECKS.machine_name: find_nested_conditional_checks,
    PerfumeKind.NESTED_LOOPS.machine_name: find_nested_loops,
    PerfumeKind.OBJECT_FOLLOWER.machine_name: find_object_follower,
    PerfumeKind.PARALLELISATION.machine_name: find_parallelisation,
    PerfumeKind.SAY_SOUND_SYNCHRONISATION.machine_name: find_say_sound_synchronisation,
    PerfumeKind.TIMER.machine_name: find_timer,
    PerfumeKind.USEFUL_POSITION_CHECK.machine_name: find_useful_position_check,
    PerfumeKind.VALID_TERMINATION.machine_name: find_valid_termination,
}


def available_finders():
    """List the available perfume finders"""
    return list(FINDER_ZOO.keys())


def get_finders(config, verbose=None):
    """Returns the machine names of the finders selected by a config

    * Reads the selection from config['finders'], either 'all' or a list of names
    * Unknown names are an error, duplicates are dropped

    Also prints a notice, when verbose, listing the finders left out.

    Parameters
    ----------
    config : Bunch or dict-like
        configuration, may have a ``finders`` entry
    verbose : bool, optional
        defaults to config['verbose']

    Returns
    -------
    list of str
        finder names, in reporting order
    """
    if verbose is None:
        verbose = config.get("verbose", False)
    selection = config.get("finders", "all")
    if selection is None or selection == "all":
        return available_finders()
    if isinstance(selection, str):
        selection = [selection]

    unknown = [name for name in selection if name not in FINDER_ZOO]
    if unknown:
        raise ValueError(f"Got config.finders={unknown}, expected some of {available_finders()}.")

    names = [name for name in FINDER_ZOO if name in set(selection)]
    if verbose:
        disabled = [name for name in FINDER_ZOO if name not in names]
        print(f"Running {len(names)} perfume finders, disabled: {', '.join(disabled)}.")
    return names


def find_all(p, finders=None):
    """Runs the perfume finders over a program

    Parameters
    ----------
    p : ProgramAST
    finders : list of str, optional
        machine names of the finders to run, defaults to all of them

    Returns
    -------
    list of PerfumeInstance
        ordered by kind, target index and anchor block id
    """
    if finders is None:
        finders = available_finders()
    instances = []
    for name in finders:
        try:
            finder = FINDER_ZOO[name]
        except KeyError:
            raise ValueError(f"Got finder={name}, expected one of {available_finders()}.") from None
        instances.extend(finder(p))
    return sorted(instances, key=lambda instance: instance.sort_key())
