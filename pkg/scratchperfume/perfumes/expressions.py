"""Perfumes found in reporter and boolean expressions"""
from ..program import nodes as n
from ..program.traversal import iter_expressions
from . import _matching as m
from .exclusions import is_comparing_literals
from .kinds import PerfumeInstance, PerfumeKind

_OPERATOR_NAMES = {n.And: "and", n.Or: "or", n.Not: "not"}


def _expression_instance(kind, visit, detail=""):
    return PerfumeInstance(kind=kind, target_name=visit.target.name,
                           anchor_block_id=visit.expr.block_id, detail=detail,
                           target_index=visit.target_index)


def find_boolean_expression(p):
    """Boolean operators combining comparisons, each operator counted on its own

    An operator only counts if its operands hold at least one comparison
    and no comparison of two literals.
    """
    instances = []
    for visit in iter_expressions(p):
        if not isinstance(visit.expr, n.BOOLEAN_OPERATORS):
            continue
        comparisons = [node for node in n.walk_expression(visit.expr)
                       if isinstance(node, n.COMPARISONS)]
        if comparisons and not any(is_comparing_literals(c) for c in comparisons):
            instances.append(_expression_instance(PerfumeKind.BOOLEAN_EXPRESSION, visit,
                                                  detail=_OPERATOR_NAMES[type(visit.expr)]))
    return m.ordered(instances)


def find_useful_position_check(p):
    """``>`` or ``<`` comparisons involving a position or a distance"""
    return m.ordered(
        _expression_instance(PerfumeKind.USEFUL_POSITION_CHECK, visit)
        for visit in iter_expressions(p)
        if isinstance(visit.expr, (n.Gt, n.Lt))
        and (m.contains(visit.expr.left, m.POSITION_REPORTERS)
             or m.contains(visit.expr.right, m.POSITION_REPORTERS))
    )
