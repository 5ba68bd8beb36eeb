"""Normalisation of sb3 input slots

An sb3 input is stored as ``[shadow_state, value, (obscured_shadow)]`` where
``shadow_state`` is 1 (shadow only), 2 (block, no shadow) or 3 (block
covering a shadow), and ``value`` is a block id, ``None`` or a compressed
primitive ``[type_code, ...]``.
"""
from dataclasses import dataclass
from typing import Optional, Union

SHADOW = 1
NO_SHADOW = 2
OBSCURED_SHADOW = 3

# compressed primitive type codes
PRIMITIVE_KINDS = {
    4: "number",
    5: "positive_number",
    6: "whole_number",
    7: "integer",
    8: "angle",
    9: "color",
    10: "string",
}
BROADCAST_PRIMITIVE = 11
VARIABLE_PRIMITIVE = 12
LIST_PRIMITIVE = 13

NUMERIC_KINDS = frozenset(["number", "positive_number", "whole_number", "integer", "angle"])
UNKNOWN_KIND = "unknown"


@dataclass(frozen=True)
class BlockRef:
    block_id: str


@dataclass(frozen=True)
class Literal:
    kind: str
    value: str

    @property
    def is_numeric(self):
        return self.kind in NUMERIC_KINDS


@dataclass(frozen=True)
class VariableRef:
    name: str
    variable_id: Optional[str] = None


@dataclass(frozen=True)
class ListRef:
    name: str
    list_id: Optional[str] = None


@dataclass(frozen=True)
class BroadcastRef:
    name: str
    broadcast_id: Optional[str] = None


@dataclass(frozen=True)
class Empty:
    pass


InputSlot = Union[BlockRef, Literal, VariableRef, ListRef, BroadcastRef, Empty]


def decode_primitive(raw):
    """Decodes a compressed primitive ``[type_code, value, (id)]``

    Unknown type codes never fail: they become ``Literal('unknown', ...)``
    and are reported by the caller.
    """
    if not isinstance(raw, (list, tuple)) or not raw:
        return Literal(UNKNOWN_KIND, _text(raw))

    code = raw[0]
    value = _text(raw[1]) if len(raw) > 1 else ""
    ref_id = raw[2] if len(raw) > 2 and isinstance(raw[2], str) else None

    if not isinstance(code, int):
        return Literal(UNKNOWN_KIND, value)
    if code in PRIMITIVE_KINDS:
        return Literal(PRIMITIVE_KINDS[code], value)
    if code == BROADCAST_PRIMITIVE:
        return BroadcastRef(value, ref_id)
    if code == VARIABLE_PRIMITIVE:
        return VariableRef(value, ref_id)
    if code == LIST_PRIMITIVE:
        return ListRef(value, ref_id)
    return Literal(UNKNOWN_KIND, value)


def decode_input_slot(raw):
    """Decodes one sb3 input into an :data:`InputSlot`

    Parameters
    ----------
    raw : list
        input as stored in ``project.json``

    Returns
    -------
    BlockRef, Literal, VariableRef, ListRef, BroadcastRef or Empty
        for shadow states 2 and 3 the covering value wins,
        for state 1 the shadow itself is the value
    """
    if not isinstance(raw, (list, tuple)) or len(raw) < 2:
        return Empty()

    value = raw[1]
    if value is None:
        return Empty()
    if isinstance(value, str):
        return BlockRef(value)
    return decode_primitive(value)


def _text(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)
