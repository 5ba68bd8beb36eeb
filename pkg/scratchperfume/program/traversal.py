"""Uniform traversals over a :class:`~scratchperfume.program.nodes.ProgramAST`"""
from dataclasses import dataclass
from typing import Any, Tuple, Union

from .nodes import (LOOPS, Body, Expr, ProcedureDef, Script, Stmt,
                    TargetAST, child_bodies, child_expressions)

Root = Union[Script, ProcedureDef]


@dataclass(frozen=True)
class StatementVisit:
    """One statement seen by :func:`iter_statements`

    Attributes
    ----------
    target_index : int
        position of the owning target in ``ast.targets``
    target : TargetAST
    root : Script or ProcedureDef
        the script or procedure definition the statement belongs to
    stmt : Stmt
    ancestors : tuple of Stmt
        enclosing control statements, outermost first
    sequence : tuple of Stmt
        the statement sequence directly holding ``stmt``
    index : int
        position of ``stmt`` in ``sequence``
    """

    target_index: int
    target: TargetAST
    root: Root
    stmt: Stmt
    ancestors: Tuple[Stmt, ...]
    sequence: Body
    index: int

    @property
    def loop_ancestors(self):
        return tuple(ancestor for ancestor in self.ancestors if isinstance(ancestor, LOOPS))

    @property
    def hat(self):
        return getattr(self.root, "hat", None)


@dataclass(frozen=True)
class ExpressionVisit:
    """One expression seen by :func:`iter_expressions`

    ``owner`` is the statement, hat or loose-reporter script the expression
    is plugged into; ``parents`` are the enclosing expressions, outermost first.
    """

    target_index: int
    target: TargetAST
    root: Root
    owner: Any
    expr: Expr
    parents: Tuple[Expr, ...]
    statement_ancestors: Tuple[Stmt, ...] = ()


def iter_statements(ast):
    """Depth-first, document-order walk over every statement of a program

    Targets are visited in order, and within a target the scripts come
    before the procedure definitions. Procedure bodies are visited as roots
    of their own, never inlined at call sites.

    Parameters
    ----------
    ast : ProgramAST

    Yields
    ------
    StatementVisit
    """
    for target_index, target in enumerate(ast.targets):
        for root in target.roots:
            yield from _walk(target_index, target, root, root.body, ())


def _walk(target_index, target, root, sequence, ancestors):
    for index, stmt in enumerate(sequence):
        yield StatementVisit(target_index, target, root, stmt, ancestors, sequence, index)
        for nested in child_bodies(stmt):
            yield from _walk(target_index, target, root, nested, ancestors + (stmt,))


def iter_expressions(ast):
    """Depth-first, document-order walk over every expression of a program

    For each root, the hat inputs and a loose reporter come first, then the
    expressions of each statement (pre-order) as the statement is reached.

    Yields
    ------
    ExpressionVisit
    """
    for target_index, target in enumerate(ast.targets):
        for root in target.roots:
            if isinstance(root, Script):
                if root.hat is not None:
                    for expr in root.hat.args:
                        yield from _walk_expression(target_index, target, root, root.hat, expr, (), ())
                if root.reporter is not None:
                    yield from _walk_expression(target_index, target, root, root, root.reporter, (), ())
            for visit in _walk(target_index, target, root, root.body, ()):
                for expr in child_expressions(visit.stmt):
                    yield from _walk_expression(target_index, target, root, visit.stmt, expr,
                                                (), visit.ancestors)


def _walk_expression(target_index, target, root, owner, expr, parents, statement_ancestors):
    yield ExpressionVisit(target_index, target, root, owner, expr, parents, statement_ancestors)
    for child in child_expressions(expr):
        yield from _walk_expression(target_index, target, root, owner, child,
                                    parents + (expr,), statement_ancestors)


def iter_roots(ast):
    """``(target_index, target, root)`` for every script and procedure definition"""
    for target_index, target in enumerate(ast.targets):
        for root in target.roots:
            yield target_index, target, root
