"""Loading of Scratch 3 projects (``.sb3`` archives or bare ``project.json``)"""
import json
import zipfile
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping, Optional, Tuple

from ..errors import FormatError, SchemaError
from .slots import (LIST_PRIMITIVE, UNKNOWN_KIND, VARIABLE_PRIMITIVE,
                    Literal, decode_input_slot)

PROJECT_MEMBER = "project.json"

# opcodes of the blocks compressed into top-level primitive arrays
PRIMITIVE_OPCODES = {
    4: ("math_number", "NUM"),
    5: ("math_positive_number", "NUM"),
    6: ("math_whole_number", "NUM"),
    7: ("math_integer", "NUM"),
    8: ("math_angle", "NUM"),
    9: ("colour_picker", "COLOUR"),
    10: ("text", "TEXT"),
    11: ("event_broadcast_menu", "BROADCAST_OPTION"),
    VARIABLE_PRIMITIVE: ("data_variable", "VARIABLE"),
    LIST_PRIMITIVE: ("data_listcontents", "LIST"),
}


@dataclass(frozen=True)
class RawBlock:
    opcode: str
    next: Optional[str] = None
    parent: Optional[str] = None
    inputs: Mapping[str, Any] = field(default_factory=dict)
    fields: Mapping[str, Tuple[str, Optional[str]]] = field(default_factory=dict)
    is_shadow: bool = False
    is_top_level: bool = False
    mutation: Optional[Mapping[str, Any]] = None

    def field_value(self, name, default=None):
        try:
            return self.fields[name][0]
        except KeyError:
            return default


@dataclass(frozen=True)
class RawTarget:
    name: str
    is_stage: bool
    blocks: Mapping[str, RawBlock] = field(default_factory=dict)
    variables: Mapping[str, Tuple[str, Any]] = field(default_factory=dict)
    lists: Mapping[str, Tuple[str, Tuple[Any, ...]]] = field(default_factory=dict)
    broadcasts: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class RawProject:
    targets: Tuple[RawTarget, ...]
    meta: Any = None
    project_id: str = ""
    diagnostics: Tuple[str, ...] = ()

    @property
    def stage(self):
        return next(target for target in self.targets if target.is_stage)


def load_project(path, project_id=None):
    """Loads a Scratch 3 project from disk

    Parameters
    ----------
    path : str or pathlib.Path
        an ``.sb3`` zip archive holding ``project.json`` at its root,
        or a bare ``project.json`` file
    project_id : str, optional
        defaults to the file stem

    Returns
    -------
    RawProject

    Raises
    ------
    OSError
        if the path cannot be read
    FormatError
        if the file is neither an sb3 archive nor a Scratch 3 ``project.json``
    SchemaError
        if a block record is malformed
    """
    path = Path(path)
    if project_id is None:
        project_id = path.stem

    if zipfile.is_zipfile(path):
        try:
            with zipfile.ZipFile(path, "r") as archive:
                if PROJECT_MEMBER not in archive.namelist():
                    raise FormatError(f"{path}: archive has no {PROJECT_MEMBER} at its root.")
                data = archive.read(PROJECT_MEMBER)
        except zipfile.BadZipFile as error:
            raise FormatError(f"{path}: corrupt archive ({error}).") from error
    else:
        data = path.read_bytes()

    try:
        document = json.loads(data.decode("utf-8-sig"))
    except (UnicodeDecodeError, ValueError) as error:
        raise FormatError(f"{path}: not a zip archive and not valid JSON ({error}).") from error

    return parse_project(document, project_id=project_id)


def parse_project(document, project_id=""):
    """Decodes a loaded ``project.json`` document into a :class:`RawProject`

    Shadow blocks are kept (flagged), unknown opcodes are kept verbatim and
    dangling ``next``/``parent`` references are dropped with a diagnostic.
    """
    if not isinstance(document, dict):
        raise FormatError(
            f"Expected a JSON object at the top level of {PROJECT_MEMBER}, "
            f"got {type(document).__name__}."
        )
    if "targets" not in document:
        if "objName" in document:
            raise FormatError("Scratch 2 projects are not supported, convert them to Scratch 3 first.")
        raise FormatError(f"{PROJECT_MEMBER} has no 'targets' array.")
    if not isinstance(document["targets"], list):
        raise FormatError(f"'targets' must be an array, got {type(document['targets']).__name__}.")

    diagnostics = []
    targets = tuple(_parse_target(raw, index, diagnostics)
                    for index, raw in enumerate(document["targets"]))

    n_stages = sum(target.is_stage for target in targets)
    if n_stages != 1:
        raise SchemaError(f"Expected exactly one stage target, found {n_stages}.")
    names = [target.name for target in targets]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise SchemaError(f"Target names must be unique, found duplicates {duplicates}.")

    return RawProject(targets=targets, meta=document.get("meta"),
                      project_id=project_id, diagnostics=tuple(diagnostics))


def _parse_target(raw, index, diagnostics):
    if not isinstance(raw, dict):
        raise SchemaError(f"Target #{index} is not an object.")
    name = str(raw.get("name", f"target{index}"))
    raw_blocks = raw.get("blocks") or {}
    if not isinstance(raw_blocks, dict):
        raise SchemaError(f"Target {name!r}: 'blocks' must be an object.")

    blocks = {}
    for block_id, record in raw_blocks.items():
        blocks[block_id] = _parse_block(name, block_id, record, diagnostics)
    blocks = _drop_dangling_references(name, blocks, diagnostics)

    variables = {var_id: (str(value[0]), value[1] if len(value) > 1 else None)
                 for var_id, value in _declarations(name, raw, "variables")}
    lists = {list_id: (str(value[0]), tuple(value[1]) if len(value) > 1 else ())
             for list_id, value in _declarations(name, raw, "lists")}
    broadcasts = {b_id: str(b_name) for b_id, b_name in
                  _mapping(raw.get("broadcasts"), f"Target {name!r}: 'broadcasts'").items()}

    return RawTarget(name=name, is_stage=bool(raw.get("isStage", False)), blocks=blocks,
                     variables=variables, lists=lists, broadcasts=broadcasts)


def _mapping(value, where):
    """An optional JSON object, empty when missing"""
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise SchemaError(f"{where} must be an object, got {type(value).__name__}.")
    return value


def _declarations(target_name, raw, key):
    """``(id, [name, value])`` pairs of the variables or lists of a target"""
    declared = raw.get(key) or {}
    if not isinstance(declared, dict):
        raise SchemaError(f"Target {target_name!r}: '{key}' must be an object.")
    for ref_id, value in declared.items():
        if not isinstance(value, list) or not value:
            raise SchemaError(f"Target {target_name!r}: malformed entry {ref_id!r} in '{key}'.")
        if key == "lists" and len(value) > 1 and not isinstance(value[1], list):
            raise SchemaError(f"Target {target_name!r}: list {ref_id!r} has no item array.")
        yield ref_id, value


def _parse_block(target_name, block_id, record, diagnostics):
    if isinstance(record, list):
        return _parse_primitive_block(target_name, block_id, record, diagnostics)
    if not isinstance(record, dict):
        raise SchemaError(f"Target {target_name!r}: block {block_id!r} is not an object.")

    opcode = record.get("opcode")
    if not opcode or not isinstance(opcode, str):
        raise SchemaError(f"Target {target_name!r}: block {block_id!r} has no opcode.")

    where = f"Target {target_name!r}: block {block_id!r}"
    for attribute in ("next", "parent"):
        ref = record.get(attribute)
        if ref is not None and not isinstance(ref, str):
            raise SchemaError(f"{where}: '{attribute}' must be a block id, got {ref!r}.")

    inputs = {}
    for input_name, raw_input in _mapping(record.get("inputs"), f"{where}: 'inputs'").items():
        slot = decode_input_slot(raw_input)
        if isinstance(slot, Literal) and slot.kind == UNKNOWN_KIND:
            diagnostics.append(
                f"{target_name}: block {block_id} ({opcode}) input {input_name} "
                f"has an unknown primitive type {raw_input!r}"
            )
        inputs[input_name] = slot

    fields = {}
    for field_name, raw_field in _mapping(record.get("fields"), f"{where}: 'fields'").items():
        if isinstance(raw_field, list) and raw_field:
            value = raw_field[0]
            ref_id = raw_field[1] if len(raw_field) > 1 else None
        else:
            value, ref_id = raw_field, None
        fields[field_name] = ("" if value is None else str(value), ref_id)

    return RawBlock(opcode=opcode,
                    next=record.get("next"),
                    parent=record.get("parent"),
                    inputs=inputs,
                    fields=fields,
                    is_shadow=bool(record.get("shadow", False)),
                    is_top_level=bool(record.get("topLevel", False)),
                    mutation=_mapping(record.get("mutation"), f"{where}: 'mutation'") or None)


def _parse_primitive_block(target_name, block_id, record, diagnostics):
    """Top-level primitives are stored as ``[type_code, value, (id), x, y]``"""
    code = record[0] if record else None
    try:
        opcode, field_name = PRIMITIVE_OPCODES[code]
    except (KeyError, TypeError):
        raise SchemaError(
            f"Target {target_name!r}: block {block_id!r} is an array "
            f"with unknown primitive type {code!r}."
        ) from None
    value = "" if len(record) < 2 or record[1] is None else str(record[1])
    ref_id = record[2] if len(record) > 2 and isinstance(record[2], str) else None
    diagnostics.append(f"{target_name}: loose {opcode} reporter {block_id} at top level")
    return RawBlock(opcode=opcode, fields={field_name: (value, ref_id)}, is_top_level=True)


def _drop_dangling_references(target_name, blocks, diagnostics):
    cleaned = {}
    for block_id, block in blocks.items():
        changes = {}
        for attribute in ("next", "parent"):
            ref = getattr(block, attribute)
            if ref is not None and ref not in blocks:
                diagnostics.append(
                    f"{target_name}: block {block_id} ({block.opcode}) has dangling "
                    f"{attribute} reference {ref!r}"
                )
                changes[attribute] = None
        if block.is_top_level and block.parent is not None and "parent" not in changes:
            changes["parent"] = None
        if changes:
            block = replace(block, **changes)
        cleaned[block_id] = block
    return cleaned
