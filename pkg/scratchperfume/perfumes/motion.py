"""Perfumes about moving sprites around"""
from ..program import nodes as n
from ..program.nodes import HatKind
from ..program.traversal import iter_roots, iter_statements
from . import _matching as m
from .kinds import PerfumeKind


def _key_scripts(p):
    for target_index, target, root in iter_roots(p):
        if m.has_hat(root, HatKind.KEY_PRESSED):
            yield target_index, target, root


def find_directed_motion(p):
    """``when key pressed`` scripts pointing in a direction, then moving"""
    instances = []
    for target_index, target, script in _key_scripts(p):
        if m.precedes(n.walk_body(script.body),
                      lambda s: isinstance(s, n.PointInDirection),
                      lambda s: isinstance(s, n.MoveSteps)):
            instances.append(
                m.hat_instance(PerfumeKind.DIRECTED_MOTION, target_index, target, script)
            )
    return m.ordered(instances)


def find_gliding_motion(p):
    """``when key pressed`` scripts with a glide, once per script"""
    instances = []
    for target_index, target, script in _key_scripts(p):
        if any(isinstance(stmt, m.GLIDES) for stmt in n.walk_body(script.body)):
            instances.append(
                m.hat_instance(PerfumeKind.GLIDING_MOTION, target_index, target, script)
            )
    return m.ordered(instances)


def find_initialisation_of_position(p):
    """Position setters in ``when green flag clicked`` scripts, once per setter"""
    return m.ordered(
        m.instance(PerfumeKind.INITIALISATION_OF_POSITIONS, visit, visit.stmt.block_id,
                   detail=type(visit.stmt).__name__)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, m.POSITION_SETTERS) and m.has_hat(visit, HatKind.GREEN_FLAG)
    )


def _follows(loop, is_target):
    return m.precedes(n.walk_body(loop.body),
                      lambda s: isinstance(s, n.PointTowards) and is_target(s.target),
                      lambda s: isinstance(s, n.MoveSteps))


def find_mouse_follower(p):
    """Loops going to the mouse pointer, or pointing towards it and moving

    Statements nested at any depth count, so an outer loop around a
    following loop is a follower too.
    """
    instances = []
    for visit in iter_statements(p):
        loop = visit.stmt
        if not isinstance(loop, n.LOOPS):
            continue
        goes_to_mouse = any(isinstance(s, n.GoToTarget) and s.target == n.MOUSE_POINTER
                            for s in n.walk_body(loop.body))
        if goes_to_mouse or _follows(loop, lambda target: target == n.MOUSE_POINTER):
            instances.append(m.instance(PerfumeKind.MOUSE_FOLLOWER, visit, loop.block_id))
    return m.ordered(instances)


def find_object_follower(p):
    """Loops pointing towards another sprite, then moving"""
    instances = []
    for visit in iter_statements(p):
        loop = visit.stmt
        if isinstance(loop, n.LOOPS) and _follows(loop, m.is_sprite_name):
            instances.append(m.instance(PerfumeKind.OBJECT_FOLLOWER, visit, loop.block_id))
    return m.ordered(instances)
