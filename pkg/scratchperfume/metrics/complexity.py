"""Cyclomatic complexity and weighted method count of Scratch projects"""
from dataclasses import dataclass
from typing import Tuple

from ..program import nodes as n
from ..program.traversal import iter_expressions, iter_roots, iter_statements

# every one of these blocks adds a decision point, an if else counts once
DECISION_POINTS = (n.If, n.IfElse, n.Forever, n.Repeat, n.RepeatUntil, n.WaitUntil)


@dataclass(frozen=True)
class ProjectMetrics:
    """Size and complexity of a project

    Attributes
    ----------
    block_count : int
        non-shadow blocks, hats and custom block definitions included
    script_count : int
        scripts, dead ones included
    wmc : int
        weighted method count, the sum of ``per_script_cc``
    per_script_cc : tuple of (str, int)
        ``(anchor_block_id, cyclomatic complexity)`` of every script and
        custom block definition
    procedure_count : int
    """

    block_count: int = 0
    script_count: int = 0
    wmc: int = 0
    per_script_cc: Tuple[Tuple[str, int], ...] = ()
    procedure_count: int = 0


def cyclomatic(body):
    """Cyclomatic complexity of a statement sequence

    Parameters
    ----------
    body : tuple of Stmt
        body of a script or custom block definition

    Returns
    -------
    int
        1 + the number of decision points, counted over the whole nested body
    """
    return 1 + sum(isinstance(stmt, DECISION_POINTS) for stmt in n.walk_body(body))


def block_count(ast):
    """Number of non-shadow blocks of a program

    Hat blocks and custom block definitions count as one block each;
    literals and inline variable or list reporters are no blocks.
    """
    count = 0
    for _, _, root in iter_roots(ast):
        if isinstance(root, n.ProcedureDef) or root.hat is not None:
            count += 1
    count += sum(1 for _ in iter_statements(ast))
    count += sum(1 for visit in iter_expressions(ast) if n.is_block_node(visit.expr))
    return count


def project_metrics(ast):
    """Computes the metrics of a program

    Parameters
    ----------
    ast : ProgramAST

    Returns
    -------
    ProjectMetrics
    """
    per_script_cc = []
    script_count = procedure_count = 0
    for _, _, root in iter_roots(ast):
        if isinstance(root, n.ProcedureDef):
            procedure_count += 1
        else:
            script_count += 1
        per_script_cc.append((root.anchor_block_id, cyclomatic(root.body)))

    return ProjectMetrics(block_count=block_count(ast), script_count=script_count,
                          wmc=sum(cc for _, cc in per_script_cc),
                          per_script_cc=tuple(per_script_cc), procedure_count=procedure_count)
