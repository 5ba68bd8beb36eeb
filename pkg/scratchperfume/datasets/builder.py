"""Programmatic construction of Scratch 3 ``project.json`` documents"""
import json
import re
import zipfile
from pathlib import Path

from .blocks import BOOLEAN_OPCODES, Block, Color, ListContents, Message, Variable

META = {"semver": "3.0.0", "vm": "0.2.0", "agent": "scratchperfume"}


class TargetBuilder:
    """Scripts, custom blocks and declarations of one sprite (or the stage)"""

    def __init__(self, project, name, is_stage=False):
        self.project = project
        self.name = name
        self.is_stage = is_stage
        self.blocks = {}
        self.variables = {}
        self.lists = {}
        self.broadcasts = {}
        self.procedures = {}
        self._n_top_level = 0

    # declarations

    def variable(self, name, value=0):
        """Declares a variable and returns its id"""
        if name not in self.variables:
            self.variables[name] = (f"var-{self.name}-{name}", value)
        return self.variables[name][0]

    def list(self, name, items=()):
        """Declares a list and returns its id"""
        if name not in self.lists:
            self.lists[name] = (f"list-{self.name}-{name}", list(items))
        return self.lists[name][0]

    def _variable_id(self, name):
        if name in self.variables:
            return self.variables[name][0]
        stage = self.project.stage
        if stage is not self and name in stage.variables:
            return stage.variables[name][0]
        return self.variable(name)

    def _list_id(self, name):
        if name in self.lists:
            return self.lists[name][0]
        stage = self.project.stage
        if stage is not self and name in stage.lists:
            return stage.lists[name][0]
        return self.list(name)

    # scripts

    def add_script(self, hat=None, body=()):
        """Adds a script and returns the id of its top block

        Parameters
        ----------
        hat : Block, optional
            hat block, without one the script is dead
        body : list of Block
        """
        blocks = ([hat] if hat is not None else []) + list(body)
        if not blocks:
            raise ValueError("A script needs a hat or at least one block.")
        return self._chain(blocks, parent=None)

    def add_loose(self, reporter):
        """Adds a reporter block lying alone on the workspace"""
        return self._chain([reporter], parent=None)

    def add_procedure(self, proccode, argument_names=(), body=(), warp=False):
        """Defines a custom block, returns the id of its definition block

        ``proccode`` uses ``%s`` for text/number and ``%b`` for boolean
        parameters, named by ``argument_names`` in order.
        """
        kinds = re.findall(r"%[sbn]", proccode)
        if len(kinds) != len(argument_names):
            raise ValueError(
                f"Custom block {proccode!r} has {len(kinds)} parameters, "
                f"got {len(argument_names)} names."
            )
        argument_ids = self._argument_ids(proccode)
        definition_id = self.project.new_id()
        prototype_id = self.project.new_id()
        self._n_top_level += 1
        self.blocks[definition_id] = {
            "opcode": "procedures_definition", "next": None, "parent": None,
            "inputs": {"custom_block": [1, prototype_id]}, "fields": {},
            "shadow": False, "topLevel": True, "x": 0, "y": 400 * self._n_top_level,
        }
        prototype_inputs = {}
        for argument_id, name, kind in zip(argument_ids, argument_names, kinds):
            reporter_id = self.project.new_id()
            opcode = "argument_reporter_boolean" if kind == "%b" else "argument_reporter_string_number"
            self.blocks[reporter_id] = {
                "opcode": opcode, "next": None, "parent": prototype_id, "inputs": {},
                "fields": {"VALUE": [name, None]}, "shadow": True, "topLevel": False,
            }
            prototype_inputs[argument_id] = [1, reporter_id]
        self.blocks[prototype_id] = {
            "opcode": "procedures_prototype", "next": None, "parent": definition_id,
            "inputs": prototype_inputs, "fields": {}, "shadow": True, "topLevel": False,
            "mutation": {
                "tagName": "mutation", "children": [], "proccode": proccode,
                "argumentids": json.dumps(argument_ids),
                "argumentnames": json.dumps(list(argument_names)),
                "argumentdefaults": json.dumps(["false" if k == "%b" else "" for k in kinds]),
                "warp": "true" if warp else "false",
            },
        }
        if body:
            first = self._chain(list(body), parent=definition_id)
            self.blocks[definition_id]["next"] = first
        return definition_id

    def _argument_ids(self, proccode):
        if proccode not in self.procedures:
            n_arguments = len(re.findall(r"%[sbn]", proccode))
            self.procedures[proccode] = [f"arg{i}-{proccode}" for i in range(n_arguments)]
        return self.procedures[proccode]

    # serialisation of blocks

    def _chain(self, blocks, parent):
        ids = [self.project.new_id() for _ in blocks]
        top_level = parent is None
        if top_level:
            self._n_top_level += 1
        for index, (block_id, block) in enumerate(zip(ids, blocks)):
            previous = parent if index == 0 else ids[index - 1]
            following = ids[index + 1] if index + 1 < len(ids) else None
            self._record(block_id, block, previous, following, top_level and index == 0)
        return ids[0]

    def _record(self, block_id, block, parent, following, top_level):
        record = {
            "opcode": block.opcode, "next": following, "parent": parent,
            "inputs": {}, "fields": {}, "shadow": block.shadow, "topLevel": top_level,
        }
        if top_level:
            record["x"], record["y"] = 0, 400 * self._n_top_level
        self.blocks[block_id] = record

        for name, value in block.fields.items():
            record["fields"][name] = self._field(value)
        for name, value in block.inputs.items():
            encoded = self._input(block_id, value)
            if encoded is not None:
                record["inputs"][name] = encoded
        for name, body in block.substacks.items():
            if body:
                record["inputs"][name] = [2, self._chain(body, parent=block_id)]

        if block.opcode == "procedures_call":
            argument_ids = self._argument_ids(block.proccode)
            for argument_id, value in zip(argument_ids, block.arguments):
                encoded = self._input(block_id, value)
                if encoded is not None:
                    record["inputs"][argument_id] = encoded
            record["mutation"] = {
                "tagName": "mutation", "children": [], "proccode": block.proccode,
                "argumentids": json.dumps(argument_ids), "warp": "false",
            }

    def _field(self, value):
        if isinstance(value, Variable):
            return [value.name, self._variable_id(value.name)]
        if isinstance(value, ListContents):
            return [value.name, self._list_id(value.name)]
        if isinstance(value, Message):
            return [value.name, self.project.broadcast(value.name)]
        return [value, None]

    def _input(self, owner_id, value):
        if value is None:
            return None
        if isinstance(value, bool):
            value = str(value).lower()
        if isinstance(value, (int, float)):
            return [1, [4, str(value)]]
        if isinstance(value, str):
            return [1, [10, value]]
        if isinstance(value, Color):
            return [1, [9, value.value]]
        if isinstance(value, Message):
            return [1, [11, value.name, self.project.broadcast(value.name)]]
        if isinstance(value, Variable):
            return [3, [12, value.name, self._variable_id(value.name)], [10, ""]]
        if isinstance(value, ListContents):
            return [3, [13, value.name, self._list_id(value.name)], [10, ""]]
        if isinstance(value, Block):
            child_id = self.project.new_id()
            self._record(child_id, value, owner_id, None, False)
            if value.shadow:
                return [1, child_id]
            if value.opcode in BOOLEAN_OPCODES:
                return [2, child_id]
            return [3, child_id, [10, ""]]
        raise TypeError(f"Cannot encode {value!r} as a block input.")

    def to_dict(self):
        target = {
            "isStage": self.is_stage,
            "name": self.name,
            "variables": {var_id: [name, value] for name, (var_id, value) in self.variables.items()},
            "lists": {list_id: [name, items] for name, (list_id, items) in self.lists.items()},
            "broadcasts": dict(self.broadcasts),
            "blocks": self.blocks,
            "comments": {},
            "currentCostume": 0,
            "costumes": [],
            "sounds": [],
            "volume": 100,
            "layerOrder": 0 if self.is_stage else 1,
        }
        if not self.is_stage:
            target.update({"visible": True, "x": 0, "y": 0, "size": 100, "direction": 90,
                           "draggable": False, "rotationStyle": "all around"})
        return target


class ProjectBuilder:
    """Builds Scratch 3 ``project.json`` documents

    Examples
    --------
    >>> from scratchperfume.datasets import blocks as b
    >>> project = ProjectBuilder()
    >>> cat = project.sprite("Cat")
    >>> _ = cat.add_script(b.when_flag_clicked(), [b.forever([b.if_(b.mouse_down(), [b.say()])])])
    >>> document = project.build()
    """

    def __init__(self, id_prefix="b"):
        self.id_prefix = id_prefix
        self._next_id = 0
        self.stage = TargetBuilder(self, "Stage", is_stage=True)
        self.targets = [self.stage]

    def new_id(self):
        self._next_id += 1
        return f"{self.id_prefix}{self._next_id:03d}"

    def sprite(self, name):
        if any(target.name == name for target in self.targets):
            raise ValueError(f"A target named {name!r} already exists.")
        target = TargetBuilder(self, name)
        self.targets.append(target)
        return target

    def broadcast(self, name):
        """Declares a broadcast message on the stage and returns its id"""
        broadcast_id = f"msg-{name}"
        self.stage.broadcasts[broadcast_id] = name
        return broadcast_id

    def build(self):
        return {"targets": [target.to_dict() for target in self.targets], "monitors": [],
                "extensions": [], "meta": dict(META)}

    def save(self, path, archive=None):
        """Writes the project to ``path``

        Parameters
        ----------
        path : str or pathlib.Path
        archive : bool, optional
            write an sb3 zip archive, by default only if the suffix is ``.sb3``
        """
        return save_project(self.build(), path, archive=archive)


def save_project(document, path, archive=None):
    """Writes a ``project.json`` document, bare or as an sb3 archive"""
    path = Path(path)
    if archive is None:
        archive = path.suffix.lower() == ".sb3"
    data = json.dumps(document, sort_keys=True).encode("utf-8")
    if archive:
        with zipfile.ZipFile(path, "w", compression=zipfile.ZIP_DEFLATED) as f:
            f.writestr("project.json", data)
    else:
        path.write_bytes(data)
    return path
