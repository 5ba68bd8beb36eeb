"""Perfumes about custom blocks and lists"""
from ..program import nodes as n
from ..program.traversal import iter_expressions, iter_statements
from . import _matching as m
from .kinds import PerfumeInstance, PerfumeKind


def _definitions(p):
    for target_index, target in enumerate(p.targets):
        for procedure in target.procedures:
            yield target_index, target, procedure


def _definition_instance(kind, target_index, target, procedure):
    return PerfumeInstance(kind=kind, target_name=target.name,
                           anchor_block_id=procedure.block_id, detail=procedure.proccode,
                           target_index=target_index)


def find_custom_block_usage(p):
    """Custom blocks that are defined and called in the same sprite"""
    called = {(visit.target_index, visit.stmt.proccode) for visit in iter_statements(p)
              if isinstance(visit.stmt, n.ProcedureCall)}
    return m.ordered(
        _definition_instance(PerfumeKind.CUSTOM_BLOCK_USAGE, target_index, target, procedure)
        for target_index, target, procedure in _definitions(p)
        if (target_index, procedure.proccode) in called
    )


def find_matching_parameter(p):
    """Custom blocks with parameters, using none that they do not declare"""
    instances = []
    for target_index, target, procedure in _definitions(p):
        if not procedure.parameters:
            continue
        declared = set(procedure.parameter_names)
        used = {expr.name for stmt in n.walk_body(procedure.body)
                for root_expr in n.child_expressions(stmt)
                for expr in n.walk_expression(root_expr)
                if isinstance(expr, n.ArgumentReporter)}
        if used <= declared:
            instances.append(_definition_instance(PerfumeKind.MATCHING_PARAMETER,
                                                  target_index, target, procedure))
    return m.ordered(instances)


def find_list_usage(p):
    """Every list block working on a declared list

    Lists live in the sprite or, for lists visible to everyone, on the stage.
    """
    global_lists = next((t.list_names for t in p.targets if t.is_stage), frozenset())
    instances = []
    for visit in iter_statements(p):
        stmt = visit.stmt
        if isinstance(stmt, n.ListOp) and stmt.list_name in visit.target.list_names | global_lists:
            instances.append(m.instance(PerfumeKind.LIST_USAGE, visit, stmt.block_id,
                                        detail=stmt.list_name))
    for visit in iter_expressions(p):
        expr = visit.expr
        if isinstance(expr, n.ListReporter):
            name = expr.list_name
        elif isinstance(expr, n.ListRef):
            name = expr.name
        else:
            continue
        if name in visit.target.list_names | global_lists:
            instances.append(PerfumeInstance(PerfumeKind.LIST_USAGE, visit.target.name,
                                             expr.block_id, name, visit.target_index))
    return m.ordered(instances)
