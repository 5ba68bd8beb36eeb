"""Typed abstract syntax tree of a Scratch 3 project

Every node is an immutable dataclass that remembers the id of the block it
was built from (``block_id``). Nodes built from inline primitives (literals,
compressed variable or list reporters) carry the id of the block owning the
input instead, since they have no block of their own.
"""
import enum
from dataclasses import dataclass, field, fields
from typing import FrozenSet, Optional, Tuple, Union


class Node:
    """Base class of statements and expressions"""

    block_id = ""


class Stmt(Node):
    pass


class Expr(Node):
    pass


Body = Tuple[Stmt, ...]
MenuValue = Union[str, Expr]

MOUSE_POINTER = "_mouse_"
RANDOM_POSITION = "_random_"
EDGE = "_edge_"

STRING_NUMBER = "string-number"
BOOLEAN = "boolean"


@dataclass(frozen=True)
class MessageRef:
    """A broadcast message chosen from the drop down menu"""

    name: str
    broadcast_id: Optional[str] = None


# Expressions


@dataclass(frozen=True)
class NumberLiteral(Expr):
    text: str
    block_id: str = ""


@dataclass(frozen=True)
class StringLiteral(Expr):
    text: str
    block_id: str = ""


@dataclass(frozen=True)
class Gt(Expr):
    left: Expr
    right: Expr
    block_id: str = ""


@dataclass(frozen=True)
class Lt(Expr):
    left: Expr
    right: Expr
    block_id: str = ""


@dataclass(frozen=True)
class Equals(Expr):
    left: Expr
    right: Expr
    block_id: str = ""


@dataclass(frozen=True)
class And(Expr):
    left: Expr
    right: Expr
    block_id: str = ""


@dataclass(frozen=True)
class Or(Expr):
    left: Expr
    right: Expr
    block_id: str = ""


@dataclass(frozen=True)
class Not(Expr):
    operand: Expr
    block_id: str = ""


@dataclass(frozen=True)
class Touching(Expr):
    """``touching (edge | mouse-pointer | sprite)?``"""

    target: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class TouchingColor(Expr):
    color: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class ColorTouchingColor(Expr):
    color: MenuValue
    other: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class KeyPressed(Expr):
    key: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class MouseDown(Expr):
    block_id: str = ""


@dataclass(frozen=True)
class DistanceTo(Expr):
    target: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class XPosition(Expr):
    block_id: str = ""


@dataclass(frozen=True)
class YPosition(Expr):
    block_id: str = ""


@dataclass(frozen=True)
class VariableRef(Expr):
    name: str
    block_id: str = ""
    inline: bool = False


@dataclass(frozen=True)
class ListRef(Expr):
    name: str
    block_id: str = ""
    inline: bool = False


@dataclass(frozen=True)
class ListReporter(Expr):
    """``item of``, ``item # of``, ``length of`` and ``contains`` reporters"""

    op: str
    list_name: str
    args: Tuple[Expr, ...] = ()
    block_id: str = ""


@dataclass(frozen=True)
class ArgumentReporter(Expr):
    name: str
    kind: str = STRING_NUMBER
    block_id: str = ""


@dataclass(frozen=True)
class Empty(Expr):
    """An input slot nobody filled in"""

    block_id: str = ""


@dataclass(frozen=True)
class UnknownExpr(Expr):
    opcode: str
    children: Tuple[Expr, ...] = ()
    block_id: str = ""


# Statements


@dataclass(frozen=True)
class If(Stmt):
    cond: Expr
    then: Body = ()
    block_id: str = ""


@dataclass(frozen=True)
class IfElse(Stmt):
    cond: Expr
    then: Body = ()
    orelse: Body = ()
    block_id: str = ""


@dataclass(frozen=True)
class Forever(Stmt):
    body: Body = ()
    block_id: str = ""


@dataclass(frozen=True)
class Repeat(Stmt):
    times: Expr
    body: Body = ()
    block_id: str = ""


@dataclass(frozen=True)
class RepeatUntil(Stmt):
    cond: Expr
    body: Body = ()
    block_id: str = ""


@dataclass(frozen=True)
class WaitSeconds(Stmt):
    secs: Expr
    block_id: str = ""


@dataclass(frozen=True)
class WaitUntil(Stmt):
    cond: Expr
    block_id: str = ""


class StopScope(str, enum.Enum):
    ALL = "all"
    THIS_SCRIPT = "this script"
    OTHER_SCRIPTS = "other scripts"


@dataclass(frozen=True)
class Stop(Stmt):
    scope: StopScope = StopScope.ALL
    block_id: str = ""


@dataclass(frozen=True)
class Broadcast(Stmt):
    message: Union[MessageRef, Expr]
    and_wait: bool = False
    block_id: str = ""


@dataclass(frozen=True)
class MoveSteps(Stmt):
    steps: Expr
    block_id: str = ""


@dataclass(frozen=True)
class PointInDirection(Stmt):
    direction: Expr
    block_id: str = ""


@dataclass(frozen=True)
class PointTowards(Stmt):
    target: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class GoToXY(Stmt):
    x: Expr
    y: Expr
    block_id: str = ""


@dataclass(frozen=True)
class GoToTarget(Stmt):
    target: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class GlideSecsToXY(Stmt):
    secs: Expr
    x: Expr
    y: Expr
    block_id: str = ""


@dataclass(frozen=True)
class GlideTo(Stmt):
    secs: Expr
    target: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class SetX(Stmt):
    x: Expr
    block_id: str = ""


@dataclass(frozen=True)
class SetY(Stmt):
    y: Expr
    block_id: str = ""


@dataclass(frozen=True)
class ChangeX(Stmt):
    dx: Expr
    block_id: str = ""


@dataclass(frozen=True)
class ChangeY(Stmt):
    dy: Expr
    block_id: str = ""


@dataclass(frozen=True)
class SwitchCostume(Stmt):
    costume: MenuValue
    block_id: str = ""


@dataclass(frozen=True)
class SwitchBackdrop(Stmt):
    backdrop: MenuValue
    and_wait: bool = False
    block_id: str = ""


@dataclass(frozen=True)
class SetSize(Stmt):
    size: Expr
    block_id: str = ""


@dataclass(frozen=True)
class SetEffect(Stmt):
    effect: str
    value: Expr
    block_id: str = ""


@dataclass(frozen=True)
class ClearEffects(Stmt):
    block_id: str = ""


@dataclass(frozen=True)
class Show(Stmt):
    block_id: str = ""


@dataclass(frozen=True)
class Hide(Stmt):
    block_id: str = ""


@dataclass(frozen=True)
class Say(Stmt):
    message: Expr
    block_id: str = ""


@dataclass(frozen=True)
class SayForSecs(Stmt):
    message: Expr
    secs: Expr
    block_id: str = ""


@dataclass(frozen=True)
class PlaySound(Stmt):
    sound: MenuValue
    until_done: bool = False
    block_id: str = ""


@dataclass(frozen=True)
class SetVariable(Stmt):
    variable: str
    value: Expr
    block_id: str = ""


@dataclass(frozen=True)
class ChangeVariableBy(Stmt):
    variable: str
    value: Expr
    block_id: str = ""


@dataclass(frozen=True)
class ListOp(Stmt):
    """``add to``, ``delete of``, ``insert at``, ``replace item``, ..."""

    op: str
    list_name: str
    args: Tuple[Expr, ...] = ()
    block_id: str = ""


@dataclass(frozen=True)
class ProcedureCall(Stmt):
    proccode: str
    args: Tuple[Expr, ...] = ()
    block_id: str = ""


@dataclass(frozen=True)
class UnknownStmt(Stmt):
    opcode: str
    children: Tuple[Expr, ...] = ()
    substacks: Tuple[Body, ...] = ()
    block_id: str = ""


LOOPS = (Forever, Repeat, RepeatUntil)
CONDITIONALS = (If, IfElse)
COMPARISONS = (Gt, Lt, Equals)
BOOLEAN_OPERATORS = (And, Or, Not)
LITERALS = (NumberLiteral, StringLiteral)

_BODY_FIELDS = ("then", "orelse", "body")


def child_expressions(node):
    """Direct expression children of a node, in document order"""
    for item in fields(node):
        value = getattr(node, item.name)
        if isinstance(value, Expr):
            yield value
        elif isinstance(value, tuple):
            for element in value:
                if isinstance(element, Expr):
                    yield element


def child_bodies(stmt):
    """Nested statement sequences of a statement, in document order"""
    for item in fields(stmt):
        if item.name in _BODY_FIELDS:
            yield getattr(stmt, item.name)
        elif item.name == "substacks":
            yield from getattr(stmt, item.name)


def walk_expression(expr):
    """Pre-order walk over an expression tree"""
    yield expr
    for child in child_expressions(expr):
        yield from walk_expression(child)


def walk_body(body):
    """Pre-order, document-order walk over a statement sequence"""
    for stmt in body:
        yield stmt
        for nested in child_bodies(stmt):
            yield from walk_body(nested)


def is_block_node(node):
    """Whether a node stands for a block of its own (and not an inline primitive)"""
    if isinstance(node, (NumberLiteral, StringLiteral, Empty)):
        return False
    if isinstance(node, (VariableRef, ListRef)):
        return not node.inline
    return True


# Scripts, procedures and targets


class HatKind(enum.Enum):
    GREEN_FLAG = "green_flag"
    KEY_PRESSED = "key_pressed"
    BROADCAST_RECEIVED = "broadcast_received"
    BACKDROP_SWITCHES_TO = "backdrop_switches_to"
    SPRITE_CLICKED = "sprite_clicked"
    STAGE_CLICKED = "stage_clicked"
    OTHER = "other"


@dataclass(frozen=True)
class EventHandler:
    """The hat block starting a script

    ``value`` holds the resolved key, message or backdrop name for the
    parameterised kinds, and the sorted field values for ``OTHER`` hats.
    """

    kind: HatKind
    value: Optional[str] = None
    opcode: str = ""
    args: Tuple[Expr, ...] = ()
    block_id: str = ""

    @property
    def signature(self):
        if self.kind is HatKind.OTHER:
            return (self.kind.value, self.opcode, self.value)
        return (self.kind.value, self.value)


@dataclass(frozen=True)
class Script:
    anchor_block_id: str
    hat: Optional[EventHandler] = None
    body: Body = ()
    reporter: Optional[Expr] = None

    @property
    def is_dead(self):
        """Scripts without a hat are never triggered"""
        return self.hat is None


@dataclass(frozen=True)
class Parameter:
    name: str
    kind: str = STRING_NUMBER


@dataclass(frozen=True)
class ProcedureDef:
    proccode: str
    parameters: Tuple[Parameter, ...] = ()
    body: Body = ()
    warp: bool = False
    block_id: str = ""

    @property
    def anchor_block_id(self):
        return self.block_id

    @property
    def parameter_names(self):
        return tuple(parameter.name for parameter in self.parameters)


@dataclass(frozen=True)
class TargetAST:
    name: str
    is_stage: bool = False
    scripts: Tuple[Script, ...] = ()
    procedures: Tuple[ProcedureDef, ...] = ()
    variable_names: FrozenSet[str] = frozenset()
    list_names: FrozenSet[str] = frozenset()
    broadcast_names: FrozenSet[str] = frozenset()

    @property
    def roots(self):
        """Scripts followed by procedure definitions"""
        return self.scripts + self.procedures


@dataclass(frozen=True)
class ProgramAST:
    project_id: str
    targets: Tuple[TargetAST, ...] = ()
    diagnostics: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def stage(self):
        return next(target for target in self.targets if target.is_stage)
