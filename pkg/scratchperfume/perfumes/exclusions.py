"""Checks for the bug pattern and smell that disqualify a perfume instance"""
from ..program.nodes import LITERALS, LOOPS


def is_comparing_literals(expr):
    """Whether a comparison only compares two literal values

    Parameters
    ----------
    expr : Gt, Lt or Equals

    Returns
    -------
    bool
        True iff both operands are number or string literals
    """
    return isinstance(expr.left, LITERALS) and isinstance(expr.right, LITERALS)


def has_nested_loop_smell(inner, sequence):
    """Whether a nested loop is alone in its enclosing statement sequence

    Parameters
    ----------
    inner : Forever, Repeat or RepeatUntil
        loop nested inside another loop
    sequence : tuple of Stmt
        statement sequence directly holding ``inner``
    """
    return isinstance(inner, LOOPS) and len(sequence) == 1 and sequence[0] == inner
