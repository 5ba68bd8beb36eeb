"""Perfumes about loops, conditionals and waiting"""
from ..program import nodes as n
from ..program.traversal import iter_statements
from . import _matching as m
from .exclusions import has_nested_loop_smell
from .kinds import PerfumeKind


def find_conditional_inside_loop(p):
    """Every ``if``/``if else`` with a loop around it"""
    return m.ordered(
        m.instance(PerfumeKind.CONDITIONAL_INSIDE_LOOP, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.CONDITIONALS) and visit.loop_ancestors
    )


def find_nested_conditional_checks(p):
    """Every ``if``/``if else`` nested inside another one"""
    return m.ordered(
        m.instance(PerfumeKind.NESTED_CONDITIONAL_CHECKS, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.CONDITIONALS)
        and any(isinstance(ancestor, n.CONDITIONALS) for ancestor in visit.ancestors)
    )


def find_nested_loops(p):
    """Loops inside loops which share their sequence with other blocks"""
    return m.ordered(
        m.instance(PerfumeKind.NESTED_LOOPS, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.LOOPS)
        and visit.loop_ancestors
        and not has_nested_loop_smell(visit.stmt, visit.sequence)
    )


def find_valid_termination(p):
    return m.ordered(
        m.instance(PerfumeKind.VALID_TERMINATION, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.RepeatUntil) and not isinstance(visit.stmt.cond, n.Empty)
    )


def find_coordination(p):
    return m.ordered(
        m.instance(PerfumeKind.COORDINATION, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.WaitUntil)
    )


def find_loop_sensing(p):
    """Sensing conditions checked over and over

    Matches conditionals anywhere inside a ``forever`` or ``repeat until``
    loop whose condition senses touching, keys or the mouse button, and
    ``repeat until`` loops whose own condition does.
    """
    instances = []
    for visit in iter_statements(p):
        stmt = visit.stmt
        if isinstance(stmt, n.CONDITIONALS):
            in_loop = any(isinstance(ancestor, m.SENSING_LOOPS) for ancestor in visit.ancestors)
            if in_loop and m.contains(stmt.cond, m.SENSING):
                instances.append(m.instance(PerfumeKind.LOOP_SENSING, visit, stmt.block_id))
        elif isinstance(stmt, n.RepeatUntil) and m.contains(stmt.cond, m.SENSING):
            instances.append(m.instance(PerfumeKind.LOOP_SENSING, visit, stmt.block_id))
    return m.ordered(instances)


def find_collision(p):
    """Touching checks in a loop with a motion or looks reaction"""
    return m.ordered(
        m.instance(PerfumeKind.COLLISION, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.CONDITIONALS)
        and visit.loop_ancestors
        and m.contains(visit.stmt.cond, m.TOUCHING)
        and any(m.is_motion(s) or m.is_looks(s) for s in m.branch_statements(visit.stmt))
    )


def find_movement_in_loop(p):
    """Key press checks in a loop which move the sprite"""
    return m.ordered(
        m.instance(PerfumeKind.MOVEMENT_IN_LOOP, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.CONDITIONALS)
        and visit.loop_ancestors
        and m.contains(visit.stmt.cond, n.KeyPressed)
        and any(m.is_motion(s) for s in m.branch_statements(visit.stmt))
    )


def find_controlled_broadcast_or_stop(p):
    return m.ordered(
        m.instance(PerfumeKind.CONTROLLED_BROADCAST_OR_STOP, visit, visit.stmt.block_id)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, n.CONDITIONALS)
        and visit.loop_ancestors
        and any(isinstance(s, (n.Broadcast, n.Stop)) for s in m.branch_statements(visit.stmt))
    )


def find_timer(p):
    """A variable changed by a fixed amount next to a fixed wait, in a loop

    Both blocks may be nested anywhere in the loop body, so a ``change by``
    inside nested loops counts once for each loop holding a fixed wait. One
    instance per loop and variable, anchored at the first matching ``change by``.
    """
    instances = []
    for visit in iter_statements(p):
        loop = visit.stmt
        if not isinstance(loop, n.LOOPS) or not _has_fixed_wait(loop):
            continue
        seen = set()
        for stmt in n.walk_body(loop.body):
            if isinstance(stmt, n.ChangeVariableBy) and isinstance(stmt.value, n.NumberLiteral) \
                    and stmt.variable not in seen:
                seen.add(stmt.variable)
                instances.append(m.instance(PerfumeKind.TIMER, visit, stmt.block_id,
                                            detail=stmt.variable))
    return m.ordered(instances)


def _has_fixed_wait(loop):
    return any(isinstance(s, n.WaitSeconds) and isinstance(s.secs, n.NumberLiteral)
               for s in n.walk_body(loop.body))
