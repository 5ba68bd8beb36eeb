"""Reconstruction of scripts and procedures from the raw block graph"""
import json
import re

from ..errors import CycleError
from ..ingest import slots
from . import nodes as n

CORE_CATEGORIES = ("motion", "looks", "sound", "event", "control", "sensing",
                   "operator", "data", "procedures", "argument", "math", "text", "colour")

HAT_KINDS = {
    "event_whenflagclicked": n.HatKind.GREEN_FLAG,
    "event_whenkeypressed": n.HatKind.KEY_PRESSED,
    "event_whenbroadcastreceived": n.HatKind.BROADCAST_RECEIVED,
    "event_whenbackdropswitchesto": n.HatKind.BACKDROP_SWITCHES_TO,
    "event_whenthisspriteclicked": n.HatKind.SPRITE_CLICKED,
    "event_whenstageclicked": n.HatKind.STAGE_CLICKED,
}
HAT_FIELDS = {
    n.HatKind.KEY_PRESSED: "KEY_OPTION",
    n.HatKind.BROADCAST_RECEIVED: "BROADCAST_OPTION",
    n.HatKind.BACKDROP_SWITCHES_TO: "BACKDROP",
}

PROCEDURE_DEFINITION = "procedures_definition"
LIST_STATEMENTS = ("data_addtolist", "data_deleteoflist", "data_deletealloflist",
                   "data_insertatlist", "data_replaceitemoflist", "data_showlist",
                   "data_hidelist")
LIST_REPORTERS = ("data_itemoflist", "data_itemnumoflist", "data_lengthoflist",
                  "data_listcontainsitem")
LIST_ARGUMENTS = ("INDEX", "ITEM")

STOP_SCOPES = {"all": n.StopScope.ALL, "this script": n.StopScope.THIS_SCRIPT}

_SHADOW_LITERALS = {
    "math_number": "NUM", "math_positive_number": "NUM", "math_whole_number": "NUM",
    "math_integer": "NUM", "math_angle": "NUM",
}


def is_hat_opcode(opcode):
    """Event hats (``event_when...``), clone hats and extension hats"""
    if opcode == "control_start_as_clone" or opcode in HAT_KINDS:
        return True
    _, _, name = opcode.partition("_")
    return name.lower().startswith("when")


def build_ast(raw):
    """Builds the typed AST of a decoded project

    Parameters
    ----------
    raw : RawProject

    Returns
    -------
    ProgramAST

    Raises
    ------
    CycleError
        if a ``next`` or substack chain revisits a block
    """
    diagnostics = list(raw.diagnostics)
    targets = tuple(_TargetBuilder(target, diagnostics).build() for target in raw.targets)
    return n.ProgramAST(project_id=raw.project_id, targets=targets,
                        diagnostics=tuple(diagnostics))


class _TargetBuilder:
    def __init__(self, target, diagnostics):
        self.target = target
        self.blocks = target.blocks
        self.diagnostics = diagnostics
        self.visited = set()
        self.unmodelled = {}

    def build(self):
        scripts, procedures, proccodes = [], [], set()
        for block_id, block in self.blocks.items():
            if not block.is_top_level or block.is_shadow:
                continue
            if block.opcode == PROCEDURE_DEFINITION:
                procedure = self.procedure(block_id, block)
                if procedure.proccode in proccodes:
                    self.diagnostics.append(
                        f"{self.target.name}: duplicate definition of custom block "
                        f"{procedure.proccode!r} ({block_id}) ignored"
                    )
                    continue
                proccodes.add(procedure.proccode)
                procedures.append(procedure)
            else:
                scripts.append(self.script(block_id, block))

        for block_id, block in self.blocks.items():
            if block.is_shadow or block_id in self.visited:
                continue
            self.diagnostics.append(
                f"{self.target.name}: orphaned block {block_id} ({block.opcode}) "
                f"is not part of any script"
            )
        for opcode, count in sorted(self.unmodelled.items()):
            self.diagnostics.append(
                f"{self.target.name}: unknown opcode {opcode!r} ({count} block(s))"
            )

        return n.TargetAST(
            name=self.target.name,
            is_stage=self.target.is_stage,
            scripts=tuple(scripts),
            procedures=tuple(procedures),
            variable_names=frozenset(name for name, _ in self.target.variables.values()),
            list_names=frozenset(name for name, _ in self.target.lists.values()),
            broadcast_names=frozenset(self.target.broadcasts.values()),
        )

    # graph walking

    def mark(self, block_id):
        if block_id in self.visited:
            raise CycleError(
                f"{self.target.name}: block {block_id} is reached twice "
                f"(cyclic or shared block chain)."
            )
        self.visited.add(block_id)
        block = self.blocks[block_id]
        category = block.opcode.partition("_")[0]
        if category not in CORE_CATEGORIES:
            self.unmodelled[block.opcode] = self.unmodelled.get(block.opcode, 0) + 1
        return block

    def chain(self, block_id):
        """Statements of a ``next`` chain starting at ``block_id``"""
        body = []
        while block_id is not None:
            if block_id not in self.blocks:
                break
            block = self.mark(block_id)
            body.append(self.statement(block_id, block))
            block_id = block.next
        return tuple(body)

    def substack(self, block, name):
        slot = block.inputs.get(name)
        if isinstance(slot, slots.BlockRef) and slot.block_id in self.blocks:
            return self.chain(slot.block_id)
        return ()

    # top level

    def script(self, block_id, block):
        if is_hat_opcode(block.opcode):
            self.mark(block_id)
            return n.Script(anchor_block_id=block_id, hat=self.hat(block_id, block),
                            body=self.chain(block.next))
        if _is_reporter(block.opcode):
            self.mark(block_id)
            return n.Script(anchor_block_id=block_id,
                            reporter=self.expression_block(block_id, block))
        return n.Script(anchor_block_id=block_id, body=self.chain(block_id))

    def hat(self, block_id, block):
        kind = HAT_KINDS.get(block.opcode, n.HatKind.OTHER)
        if kind in HAT_FIELDS:
            value = block.field_value(HAT_FIELDS[kind], "")
        elif kind is n.HatKind.OTHER:
            value = ",".join(f"{name}={block.fields[name][0]}" for name in sorted(block.fields))
        else:
            value = None
        args = tuple(self.input(block_id, block, name) for name in block.inputs)
        return n.EventHandler(kind=kind, value=value, opcode=block.opcode,
                              args=args, block_id=block_id)

    def procedure(self, block_id, block):
        self.mark(block_id)
        prototype_id = None
        slot = block.inputs.get("custom_block")
        if isinstance(slot, slots.BlockRef) and slot.block_id in self.blocks:
            prototype_id = slot.block_id

        mutation = {}
        if prototype_id is not None:
            prototype = self.blocks[prototype_id]
            mutation = prototype.mutation or {}
            if not prototype.is_shadow:
                self.mark(prototype_id)
            self.visit_shadow_inputs(prototype)
        proccode = str(mutation.get("proccode", ""))
        names = _json_list(mutation.get("argumentnames"))
        kinds = [n.BOOLEAN if token == "%b" else n.STRING_NUMBER
                 for token in re.findall(r"%[sbn]", proccode)]
        parameters = tuple(n.Parameter(name=str(name), kind=kind)
                           for name, kind in zip(names, kinds + [n.STRING_NUMBER] * len(names)))
        return n.ProcedureDef(proccode=proccode, parameters=parameters,
                              body=self.chain(block.next),
                              warp=_truthy(mutation.get("warp")), block_id=block_id)

    def visit_shadow_inputs(self, block):
        # shadows are editor artefacts, we only make sure real blocks under them are seen
        for slot in block.inputs.values():
            if isinstance(slot, slots.BlockRef) and slot.block_id in self.blocks:
                child = self.blocks[slot.block_id]
                if not child.is_shadow and slot.block_id not in self.visited:
                    self.expression_block(slot.block_id, self.mark(slot.block_id))

    # inputs

    def input(self, block_id, block, name):
        """Expression plugged into input ``name`` of ``block``"""
        slot = block.inputs.get(name, slots.Empty())
        if isinstance(slot, slots.Empty):
            return n.Empty(block_id=block_id)
        if isinstance(slot, slots.Literal):
            if slot.is_numeric:
                return n.NumberLiteral(slot.value, block_id=block_id)
            return n.StringLiteral(slot.value, block_id=block_id)
        if isinstance(slot, slots.VariableRef):
            return n.VariableRef(slot.name, block_id=block_id, inline=True)
        if isinstance(slot, slots.ListRef):
            return n.ListRef(slot.name, block_id=block_id, inline=True)
        if isinstance(slot, slots.BroadcastRef):
            return n.StringLiteral(slot.name, block_id=block_id)

        child_id = slot.block_id
        if child_id not in self.blocks:
            return n.UnknownExpr(opcode="missing", block_id=block_id)
        child = self.blocks[child_id]
        if child.is_shadow:
            return self.shadow_literal(child_id, child)
        return self.expression_block(child_id, self.mark(child_id))

    def shadow_literal(self, block_id, block):
        if block.opcode in _SHADOW_LITERALS:
            return n.NumberLiteral(block.field_value("NUM", ""), block_id=block_id)
        value = next(iter(block.fields.values()), ("", None))[0]
        return n.StringLiteral(value, block_id=block_id)

    def menu(self, block_id, block, name):
        """Drop down value of a menu input, or the expression covering it"""
        slot = block.inputs.get(name)
        if isinstance(slot, slots.BlockRef) and slot.block_id in self.blocks:
            child = self.blocks[slot.block_id]
            if child.is_shadow:
                return next(iter(child.fields.values()), ("", None))[0]
            return self.expression_block(slot.block_id, self.mark(slot.block_id))
        if isinstance(slot, slots.BroadcastRef):
            return slot.name
        if isinstance(slot, slots.Literal):
            return slot.value
        return self.input(block_id, block, name)

    def message(self, block_id, block):
        slot = block.inputs.get("BROADCAST_INPUT")
        if isinstance(slot, slots.BroadcastRef):
            return n.MessageRef(slot.name, slot.broadcast_id)
        if isinstance(slot, slots.BlockRef) and slot.block_id in self.blocks:
            child = self.blocks[slot.block_id]
            if child.is_shadow:
                name, ref = child.fields.get("BROADCAST_OPTION", ("", None))
                return n.MessageRef(name, ref)
        return self.input(block_id, block, "BROADCAST_INPUT")

    def remaining_inputs(self, block_id, block, skip=()):
        """Expressions of every input except substacks, in input order"""
        children = []
        for name, slot in block.inputs.items():
            if name in skip or name.startswith("SUBSTACK"):
                continue
            if isinstance(slot, slots.BlockRef) and slot.block_id in self.blocks \
                    and self.blocks[slot.block_id].is_shadow:
                self.visit_shadow_inputs(self.blocks[slot.block_id])
                continue
            children.append(self.input(block_id, block, name))
        return tuple(children)

    # statements

    def statement(self, block_id, block):
        op = block.opcode
        expr = lambda name: self.input(block_id, block, name)  # noqa: E731
        menu = lambda name: self.menu(block_id, block, name)  # noqa: E731

        if op == "control_if":
            return n.If(expr("CONDITION"), self.substack(block, "SUBSTACK"), block_id=block_id)
        if op == "control_if_else":
            cond = expr("CONDITION")
            return n.IfElse(cond, self.substack(block, "SUBSTACK"),
                            self.substack(block, "SUBSTACK2"), block_id=block_id)
        if op == "control_forever":
            return n.Forever(self.substack(block, "SUBSTACK"), block_id=block_id)
        if op == "control_repeat":
            return n.Repeat(expr("TIMES"), self.substack(block, "SUBSTACK"), block_id=block_id)
        if op == "control_repeat_until":
            return n.RepeatUntil(expr("CONDITION"), self.substack(block, "SUBSTACK"),
                                 block_id=block_id)
        if op == "control_wait":
            return n.WaitSeconds(expr("DURATION"), block_id=block_id)
        if op == "control_wait_until":
            return n.WaitUntil(expr("CONDITION"), block_id=block_id)
        if op == "control_stop":
            option = block.field_value("STOP_OPTION", "all")
            return n.Stop(STOP_SCOPES.get(option, n.StopScope.OTHER_SCRIPTS), block_id=block_id)
        if op in ("event_broadcast", "event_broadcastandwait"):
            return n.Broadcast(self.message(block_id, block),
                               and_wait=op == "event_broadcastandwait", block_id=block_id)

        if op == "motion_movesteps":
            return n.MoveSteps(expr("STEPS"), block_id=block_id)
        if op == "motion_pointindirection":
            return n.PointInDirection(expr("DIRECTION"), block_id=block_id)
        if op == "motion_pointtowards":
            return n.PointTowards(menu("TOWARDS"), block_id=block_id)
        if op == "motion_gotoxy":
            return n.GoToXY(expr("X"), expr("Y"), block_id=block_id)
        if op == "motion_goto":
            return n.GoToTarget(menu("TO"), block_id=block_id)
        if op == "motion_glidesecstoxy":
            return n.GlideSecsToXY(expr("SECS"), expr("X"), expr("Y"), block_id=block_id)
        if op == "motion_glideto":
            return n.GlideTo(expr("SECS"), menu("TO"), block_id=block_id)
        if op == "motion_setx":
            return n.SetX(expr("X"), block_id=block_id)
        if op == "motion_sety":
            return n.SetY(expr("Y"), block_id=block_id)
        if op == "motion_changexby":
            return n.ChangeX(expr("DX"), block_id=block_id)
        if op == "motion_changeyby":
            return n.ChangeY(expr("DY"), block_id=block_id)

        if op == "looks_switchcostumeto":
            return n.SwitchCostume(menu("COSTUME"), block_id=block_id)
        if op in ("looks_switchbackdropto", "looks_switchbackdroptoandwait"):
            return n.SwitchBackdrop(menu("BACKDROP"),
                                    and_wait=op == "looks_switchbackdroptoandwait",
                                    block_id=block_id)
        if op == "looks_setsizeto":
            return n.SetSize(expr("SIZE"), block_id=block_id)
        if op == "looks_seteffectto":
            return n.SetEffect(block.field_value("EFFECT", ""), expr("VALUE"), block_id=block_id)
        if op == "looks_cleargraphiceffects":
            return n.ClearEffects(block_id=block_id)
        if op == "looks_show":
            return n.Show(block_id=block_id)
        if op == "looks_hide":
            return n.Hide(block_id=block_id)
        if op == "looks_say":
            return n.Say(expr("MESSAGE"), block_id=block_id)
        if op == "looks_sayforsecs":
            return n.SayForSecs(expr("MESSAGE"), expr("SECS"), block_id=block_id)

        if op in ("sound_play", "sound_playuntildone"):
            return n.PlaySound(menu("SOUND_MENU"), until_done=op == "sound_playuntildone",
                               block_id=block_id)

        if op == "data_setvariableto":
            return n.SetVariable(block.field_value("VARIABLE", ""), expr("VALUE"),
                                 block_id=block_id)
        if op == "data_changevariableby":
            return n.ChangeVariableBy(block.field_value("VARIABLE", ""), expr("VALUE"),
                                      block_id=block_id)
        if op in LIST_STATEMENTS:
            args = tuple(expr(name) for name in LIST_ARGUMENTS if name in block.inputs)
            return n.ListOp(op.split("_", 1)[1], block.field_value("LIST", ""), args,
                            block_id=block_id)
        if op == "procedures_call":
            mutation = block.mutation or {}
            argument_ids = _json_list(mutation.get("argumentids"))
            args = tuple(expr(arg_id) for arg_id in argument_ids)
            return n.ProcedureCall(str(mutation.get("proccode", "")), args, block_id=block_id)

        substacks = tuple(self.substack(block, name) for name in block.inputs
                          if name.startswith("SUBSTACK"))
        return n.UnknownStmt(op, self.remaining_inputs(block_id, block), substacks,
                             block_id=block_id)

    # expressions

    def expression_block(self, block_id, block):
        op = block.opcode
        expr = lambda name: self.input(block_id, block, name)  # noqa: E731
        menu = lambda name: self.menu(block_id, block, name)  # noqa: E731

        if op in ("operator_gt", "operator_lt", "operator_equals", "operator_and", "operator_or"):
            node = {"operator_gt": n.Gt, "operator_lt": n.Lt, "operator_equals": n.Equals,
                    "operator_and": n.And, "operator_or": n.Or}[op]
            return node(expr("OPERAND1"), expr("OPERAND2"), block_id=block_id)
        if op == "operator_not":
            return n.Not(expr("OPERAND"), block_id=block_id)
        if op == "sensing_touchingobject":
            return n.Touching(menu("TOUCHINGOBJECTMENU"), block_id=block_id)
        if op == "sensing_touchingcolor":
            return n.TouchingColor(menu("COLOR"), block_id=block_id)
        if op == "sensing_coloristouchingcolor":
            return n.ColorTouchingColor(menu("COLOR"), menu("COLOR2"), block_id=block_id)
        if op == "sensing_keypressed":
            return n.KeyPressed(menu("KEY_OPTION"), block_id=block_id)
        if op == "sensing_mousedown":
            return n.MouseDown(block_id=block_id)
        if op == "sensing_distanceto":
            return n.DistanceTo(menu("DISTANCETOMENU"), block_id=block_id)
        if op == "motion_xposition":
            return n.XPosition(block_id=block_id)
        if op == "motion_yposition":
            return n.YPosition(block_id=block_id)
        if op == "data_variable":
            return n.VariableRef(block.field_value("VARIABLE", ""), block_id=block_id)
        if op == "data_listcontents":
            return n.ListRef(block.field_value("LIST", ""), block_id=block_id)
        if op in LIST_REPORTERS:
            args = tuple(expr(name) for name in LIST_ARGUMENTS if name in block.inputs)
            return n.ListReporter(op.split("_", 1)[1], block.field_value("LIST", ""), args,
                                  block_id=block_id)
        if op == "argument_reporter_string_number":
            return n.ArgumentReporter(block.field_value("VALUE", ""), n.STRING_NUMBER,
                                      block_id=block_id)
        if op == "argument_reporter_boolean":
            return n.ArgumentReporter(block.field_value("VALUE", ""), n.BOOLEAN,
                                      block_id=block_id)
        if op in _SHADOW_LITERALS:
            return n.NumberLiteral(block.field_value("NUM", ""), block_id=block_id)
        if op in ("text", "colour_picker"):
            return n.StringLiteral(next(iter(block.fields.values()), ("", None))[0],
                                   block_id=block_id)
        return n.UnknownExpr(op, self.remaining_inputs(block_id, block), block_id=block_id)


_REPORTER_OPCODES = frozenset([
    "sensing_touchingobject", "sensing_touchingcolor", "sensing_coloristouchingcolor",
    "sensing_keypressed", "sensing_mousedown", "sensing_distanceto", "motion_xposition",
    "motion_yposition", "data_variable", "data_listcontents", "argument_reporter_string_number",
    "argument_reporter_boolean", "text", "colour_picker", *LIST_REPORTERS, *_SHADOW_LITERALS,
])


def _is_reporter(opcode):
    return opcode.startswith("operator_") or opcode in _REPORTER_OPCODES


def _json_list(value):
    if value is None:
        return []
    if isinstance(value, list):
        return value
    try:
        decoded = json.loads(value)
    except (TypeError, ValueError):
        return []
    return decoded if isinstance(decoded, list) else []


def _truthy(value):
    if isinstance(value, str):
        return value.lower() == "true"
    return bool(value)
