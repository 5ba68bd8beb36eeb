"""Predicates shared by the perfume finders"""
from ..program import nodes as n
from .kinds import PerfumeInstance

SENSING = (n.Touching, n.TouchingColor, n.ColorTouchingColor, n.KeyPressed, n.MouseDown)
TOUCHING = (n.Touching, n.TouchingColor, n.ColorTouchingColor)
POSITION_REPORTERS = (n.XPosition, n.YPosition, n.DistanceTo)
SENSING_LOOPS = (n.Forever, n.RepeatUntil)

MOTION_STATEMENTS = (n.MoveSteps, n.PointInDirection, n.PointTowards, n.GoToXY, n.GoToTarget,
                     n.GlideSecsToXY, n.GlideTo, n.SetX, n.SetY, n.ChangeX, n.ChangeY)
LOOKS_STATEMENTS = (n.SwitchCostume, n.SwitchBackdrop, n.SetSize, n.SetEffect, n.ClearEffects,
                    n.Show, n.Hide, n.Say, n.SayForSecs)
LOOKS_SETTERS = (n.SwitchCostume, n.SwitchBackdrop, n.SetSize, n.SetEffect, n.ClearEffects,
                 n.Show, n.Hide)
POSITION_SETTERS = (n.GoToXY, n.GoToTarget, n.SetX, n.SetY)
GLIDES = (n.GlideSecsToXY, n.GlideTo)

SPECIAL_TARGETS = (n.MOUSE_POINTER, n.RANDOM_POSITION, n.EDGE)


def contains(expr, types):
    """Whether an expression tree holds a node of one of ``types``"""
    return any(isinstance(node, types) for node in n.walk_expression(expr))


def is_motion(stmt):
    if isinstance(stmt, MOTION_STATEMENTS):
        return True
    return isinstance(stmt, n.UnknownStmt) and stmt.opcode.startswith("motion_")


def is_looks(stmt):
    if isinstance(stmt, LOOKS_STATEMENTS):
        return True
    return isinstance(stmt, n.UnknownStmt) and stmt.opcode.startswith("looks_")


def branch_statements(conditional):
    """Every statement of the branches of an ``If``/``IfElse``, at any depth"""
    yield from n.walk_body(conditional.then)
    if isinstance(conditional, n.IfElse):
        yield from n.walk_body(conditional.orelse)


def has_hat(visit_or_root, kind):
    hat = getattr(getattr(visit_or_root, "root", visit_or_root), "hat", None)
    return hat is not None and hat.kind is kind


def is_sprite_name(value):
    """Menu values naming another sprite (not the mouse, random position or edge)"""
    return isinstance(value, str) and value != "" and value not in SPECIAL_TARGETS


def precedes(statements, first, then):
    """Whether a statement matching ``first`` comes before one matching ``then``"""
    seen_first = False
    for stmt in statements:
        if seen_first and then(stmt):
            return True
        if first(stmt):
            seen_first = True
    return False


def instance(kind, visit, block_id, detail=""):
    return PerfumeInstance(kind=kind, target_name=visit.target.name, anchor_block_id=block_id,
                           detail=detail, target_index=visit.target_index)


def ordered(instances):
    """Finder output order: target index, then anchor block id"""
    return sorted(instances, key=lambda item: (item.target_index, item.anchor_block_id, item.detail))


def hat_instance(kind, target_index, target, script, detail=None):
    """Instance anchored at the hat of ``script``"""
    if detail is None:
        detail = script.hat.value or ""
    return PerfumeInstance(kind=kind, target_name=target.name, anchor_block_id=script.hat.block_id,
                           detail=detail, target_index=target_index)
