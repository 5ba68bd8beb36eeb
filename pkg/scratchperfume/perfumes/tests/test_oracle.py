"""Finders against naive matchers working directly on ``project.json``

The matchers below read the raw block dictionaries and share no code with
the finders or the AST.
"""
import itertools
import json
from collections import Counter, defaultdict

import numpy as np
import pytest

from ...datasets import ProjectBuilder, blocks as b
from ...ingest import parse_project
from ...program import build_ast
from .. import FINDER_ZOO

N_PROGRAMS = 1000
MAX_BLOCKS = 30
# programs going over MAX_BLOCKS are drawn again
GENERATOR_BUDGET = 24

LOOP_OPS = {"control_forever", "control_repeat", "control_repeat_until"}
SENSING_LOOP_OPS = {"control_forever", "control_repeat_until"}
CONDITIONAL_OPS = {"control_if", "control_if_else"}
SENSING_OPS = {"sensing_touchingobject", "sensing_touchingcolor", "sensing_coloristouchingcolor",
               "sensing_keypressed", "sensing_mousedown"}
TOUCHING_OPS = {"sensing_touchingobject", "sensing_touchingcolor", "sensing_coloristouchingcolor"}
COMPARISON_OPS = {"operator_gt", "operator_lt", "operator_equals"}
POSITION_OPS = {"motion_xposition", "motion_yposition", "sensing_distanceto"}
LOOKS_SETTER_OPS = {"looks_switchcostumeto", "looks_switchbackdropto",
                    "looks_switchbackdroptoandwait", "looks_setsizeto", "looks_seteffectto",
                    "looks_cleargraphiceffects", "looks_show", "looks_hide"}
POSITION_SETTER_OPS = {"motion_gotoxy", "motion_goto", "motion_setx", "motion_sety"}
LIST_OPS = {"data_addtolist", "data_deleteoflist", "data_deletealloflist", "data_insertatlist",
            "data_replaceitemoflist", "data_itemoflist", "data_itemnumoflist",
            "data_lengthoflist", "data_listcontainsitem", "data_showlist", "data_hidelist"}
SPECIAL_MENU_VALUES = {"_mouse_", "_random_", "_edge_", ""}


# random programs


class ProgramGenerator:
    def __init__(self, seed):
        self.rng = np.random.default_rng(seed)
        self.budget = GENERATOR_BUDGET

    def pick(self, options):
        return options[int(self.rng.integers(len(options)))]

    def chance(self, p):
        return bool(self.rng.random() < p)

    def spend(self, n_blocks=1):
        self.budget -= n_blocks

    def condition(self, depth=0):
        options = ["touching", "touching_dog", "color", "key", "mouse", "gt_x", "lt_distance",
                   "literals", "score"]
        if depth < 2 and self.budget > 4:
            options += ["and", "or", "not"]
        choice = self.pick(options)
        self.spend()
        if choice == "touching":
            return b.touching(b.EDGE)
        if choice == "touching_dog":
            return b.touching("Dog")
        if choice == "color":
            return b.touching_color()
        if choice == "key":
            return b.key_pressed(self.pick(["space", "right arrow"]))
        if choice == "mouse":
            return b.mouse_down()
        if choice == "gt_x":
            self.spend()
            return b.gt(b.x_position(), 10)
        if choice == "lt_distance":
            self.spend()
            return b.lt(b.distance_to("Dog"), 5)
        if choice == "literals":
            return b.gt(1, 2)
        if choice == "score":
            return b.equals(b.Variable("score"), 3)
        if choice == "not":
            return b.not_(self.condition(depth + 1))
        operator = b.and_ if choice == "and" else b.or_
        return operator(self.condition(depth + 1), self.condition(depth + 1))

    def simple_statement(self):
        self.spend()
        choice = self.pick([
            "move", "point_direction", "point_mouse", "point_dog", "go_mouse", "go_random",
            "go_xy", "glide_xy", "glide_to", "set_x", "change_x", "turn", "costume",
            "backdrop_day", "backdrop_night", "size", "show", "hide", "say", "say_empty",
            "say_item", "say_secs", "sound", "sound_until_done", "change_timer", "change_step",
            "wait", "wait_until", "broadcast_a", "broadcast_b", "broadcast_wait", "stop",
            "add_item", "call",
        ])
        if choice == "move":
            return b.move(10)
        if choice == "point_direction":
            return b.point_in_direction(90)
        if choice == "point_mouse":
            return b.point_towards(b.MOUSE)
        if choice == "point_dog":
            return b.point_towards("Dog")
        if choice == "go_mouse":
            return b.go_to(b.MOUSE)
        if choice == "go_random":
            return b.go_to(b.RANDOM)
        if choice == "go_xy":
            return b.go_to_xy(0, 0)
        if choice == "glide_xy":
            return b.glide_to_xy(1, 0, 0)
        if choice == "glide_to":
            return b.glide_to(1, b.MOUSE)
        if choice == "set_x":
            return b.set_x(0)
        if choice == "change_x":
            return b.change_x(10)
        if choice == "turn":
            return b.turn_right(15)
        if choice == "costume":
            return b.switch_costume("idle")
        if choice == "backdrop_day":
            return b.switch_backdrop("day")
        if choice == "backdrop_night":
            return b.switch_backdrop_and_wait("night")
        if choice == "size":
            return b.set_size(100)
        if choice == "show":
            return b.show()
        if choice == "hide":
            return b.hide()
        if choice == "say":
            return b.say("hi")
        if choice == "say_empty":
            return b.say("")
        if choice == "say_item":
            self.spend()
            return b.say(b.item_of_list("items"))
        if choice == "say_secs":
            return b.say_for_secs("hi", 1)
        if choice == "sound":
            return b.play_sound("pop")
        if choice == "sound_until_done":
            return b.play_sound_until_done("pop")
        if choice == "change_timer":
            return b.change_variable("t", 1)
        if choice == "change_step":
            return b.change_variable("t", b.Variable("step"))
        if choice == "wait":
            return b.wait(1)
        if choice == "wait_until":
            return b.wait_until(self.condition())
        if choice == "broadcast_a":
            return b.broadcast("a")
        if choice == "broadcast_b":
            return b.broadcast("b")
        if choice == "broadcast_wait":
            return b.broadcast_and_wait("a")
        if choice == "stop":
            return b.stop("all")
        if choice == "add_item":
            return b.add_to_list("items", b.ListContents("items") if self.chance(0.3) else "x")
        return b.call("jump %s", 1)

    def statement(self, depth):
        if depth >= 3 or not self.chance(0.3):
            return self.simple_statement()
        self.spend()
        choice = self.pick(["forever", "repeat", "until", "until_empty", "if", "if_else"])
        if choice == "forever":
            return b.forever(self.body(depth + 1))
        if choice == "repeat":
            return b.repeat(3, self.body(depth + 1))
        if choice == "until":
            return b.repeat_until(self.condition(), self.body(depth + 1))
        if choice == "until_empty":
            return b.repeat_until(None, self.body(depth + 1))
        if choice == "if":
            return b.if_(self.condition(), self.body(depth + 1))
        return b.if_else(self.condition(), self.body(depth + 1), self.body(depth + 1))

    def body(self, depth=0):
        statements = []
        for _ in range(int(self.rng.integers(0, 4))):
            if self.budget <= 0:
                break
            statements.append(self.statement(depth))
        if self.budget >= 3 and self.chance(0.1):
            self.spend(3)
            statements += [b.say(self.pick(["hi", ""])),
                           self.pick([b.play_sound_until_done, b.play_sound])("pop"),
                           b.say(self.pick(["", "bye"]))]
        return statements

    def hat(self):
        self.spend()
        choice = self.pick(["flag", "key_space", "key_right", "receive_a", "receive_b",
                            "backdrop_day", "backdrop_night", "clone", "dead"])
        if choice == "flag":
            return b.when_flag_clicked()
        if choice == "key_space":
            return b.when_key_pressed("space")
        if choice == "key_right":
            return b.when_key_pressed("right arrow")
        if choice == "receive_a":
            return b.when_i_receive("a")
        if choice == "receive_b":
            return b.when_i_receive("b")
        if choice == "backdrop_day":
            return b.when_backdrop_switches_to("day")
        if choice == "backdrop_night":
            return b.when_backdrop_switches_to("night")
        if choice == "clone":
            return b.when_i_start_as_clone()
        return None

    def project(self):
        project = ProjectBuilder()
        if self.chance(0.3):
            project.stage.list("items")
        sprites = [project.sprite("Cat"), project.sprite("Dog")]
        if self.chance(0.3):
            sprite = self.pick(sprites)
            self.spend(3)
            parameter = self.pick(["h", "g"])
            sprite.add_procedure("jump %s", ["h"],
                                 [b.change_y(b.argument(parameter))] + self.body(1))
        while self.budget > 0:
            target = self.pick(sprites + [project.stage])
            hat = self.hat()
            body = self.body()
            if hat is None and not body:
                continue
            target.add_script(hat, body)
        return project


# naive matchers over the raw document


class RawTarget:
    def __init__(self, document, index):
        self.index = index
        raw = document["targets"][index]
        self.name = raw["name"]
        self.blocks = raw["blocks"]
        stage = next(target for target in document["targets"] if target["isStage"])
        self.list_names = {entry[0] for entry in raw["lists"].values()}
        self.list_names |= {entry[0] for entry in stage["lists"].values()}

    def op(self, block_id):
        return self.blocks[block_id]["opcode"]

    def chain(self, block_id):
        ids = []
        while block_id is not None:
            ids.append(block_id)
            block_id = self.blocks[block_id]["next"]
        return ids

    def substacks(self, block_id):
        inputs = self.blocks[block_id]["inputs"]
        return [self.chain(inputs[name][1]) for name in ("SUBSTACK", "SUBSTACK2") if name in inputs]

    def roots(self):
        """``(hat id or None, body ids)`` per script and custom block definition"""
        for block_id, block in self.blocks.items():
            if not block["topLevel"] or block["shadow"]:
                continue
            opcode = block["opcode"]
            if opcode.startswith("event_when") or opcode == "control_start_as_clone":
                yield block_id, self.chain(block["next"])
            elif opcode == "procedures_definition":
                yield None, self.chain(block["next"])
            else:
                yield None, self.chain(block_id)

    def statements(self, sequence, ancestors=()):
        """``(id, ancestor ids, sequence)`` in document order"""
        for block_id in sequence:
            yield block_id, ancestors, sequence
            for nested in self.substacks(block_id):
                yield from self.statements(nested, ancestors + (block_id,))

    def all_statements(self):
        for hat, body in self.roots():
            for block_id, ancestors, sequence in self.statements(body):
                yield hat, block_id, ancestors, sequence

    def reporter(self, block_id, name):
        value = self.blocks[block_id]["inputs"].get(name)
        if value is None or not isinstance(value[1], str):
            return None
        if self.blocks[value[1]]["shadow"]:
            return None
        return value[1]

    def subtree(self, block_id):
        """Ids of the reporter blocks under ``block_id``, itself included"""
        if block_id is None:
            return []
        ids = [block_id]
        for name in self.blocks[block_id]["inputs"]:
            if not name.startswith("SUBSTACK"):
                ids.extend(self.subtree(self.reporter(block_id, name)))
        return ids

    def subtree_ops(self, block_id):
        return {self.op(child) for child in self.subtree(block_id)}

    def menu(self, block_id, name):
        child = self.blocks[self.blocks[block_id]["inputs"][name][1]]
        return next(iter(child["fields"].values()))[0]

    def literal(self, block_id, name):
        value = self.blocks[block_id]["inputs"].get(name)
        return value is not None and isinstance(value[1], list) and 4 <= value[1][0] <= 10

    def numeric(self, block_id, name):
        value = self.blocks[block_id]["inputs"].get(name)
        return value is not None and isinstance(value[1], list) and 4 <= value[1][0] <= 8

    def descendants(self, block_id):
        return [child for nested in self.substacks(block_id)
                for child, _, _ in self.statements(nested)]


def _targets(document):
    return [RawTarget(document, index) for index in range(len(document["targets"]))]


def _statement_oracle(predicate):
    def oracle(document):
        found = []
        for target in _targets(document):
            for hat, block_id, ancestors, sequence in target.all_statements():
                if predicate(target, hat, block_id, ancestors, sequence):
                    found.append((target.name, block_id))
        return found
    return oracle


def _is_conditional_in_loop(target, block_id, ancestors):
    return target.op(block_id) in CONDITIONAL_OPS \
        and any(target.op(a) in LOOP_OPS for a in ancestors)


def _reacts_with(target, block_id, accept):
    return any(accept(target.op(child)) for child in target.descendants(block_id))


def _conditional_inside_loop(target, hat, block_id, ancestors, sequence):
    return _is_conditional_in_loop(target, block_id, ancestors)


def _nested_conditional(target, hat, block_id, ancestors, sequence):
    return target.op(block_id) in CONDITIONAL_OPS \
        and any(target.op(a) in CONDITIONAL_OPS for a in ancestors)


def _nested_loop(target, hat, block_id, ancestors, sequence):
    return target.op(block_id) in LOOP_OPS and len(sequence) > 1 \
        and any(target.op(a) in LOOP_OPS for a in ancestors)


def _valid_termination(target, hat, block_id, ancestors, sequence):
    return target.op(block_id) == "control_repeat_until" \
        and target.reporter(block_id, "CONDITION") is not None


def _coordination(target, hat, block_id, ancestors, sequence):
    return target.op(block_id) == "control_wait_until"


def _loop_sensing(target, hat, block_id, ancestors, sequence):
    sensing = target.subtree_ops(target.reporter(block_id, "CONDITION")) & SENSING_OPS
    if target.op(block_id) in CONDITIONAL_OPS:
        return bool(sensing) and any(target.op(a) in SENSING_LOOP_OPS for a in ancestors)
    return target.op(block_id) == "control_repeat_until" and bool(sensing)


def _collision(target, hat, block_id, ancestors, sequence):
    return _is_conditional_in_loop(target, block_id, ancestors) \
        and target.subtree_ops(target.reporter(block_id, "CONDITION")) & TOUCHING_OPS \
        and _reacts_with(target, block_id, lambda op: op.startswith(("motion_", "looks_")))


def _movement_in_loop(target, hat, block_id, ancestors, sequence):
    return _is_conditional_in_loop(target, block_id, ancestors) \
        and "sensing_keypressed" in target.subtree_ops(target.reporter(block_id, "CONDITION")) \
        and _reacts_with(target, block_id, lambda op: op.startswith("motion_"))


def _controlled_broadcast(target, hat, block_id, ancestors, sequence):
    return _is_conditional_in_loop(target, block_id, ancestors) and _reacts_with(
        target, block_id,
        lambda op: op in ("event_broadcast", "event_broadcastandwait", "control_stop"))


def _hat_is(target, hat, opcode):
    return hat is not None and target.op(hat) == opcode


def _initialisation_of_looks(target, hat, block_id, ancestors, sequence):
    return _hat_is(target, hat, "event_whenflagclicked") and target.op(block_id) in LOOKS_SETTER_OPS


def _initialisation_of_positions(target, hat, block_id, ancestors, sequence):
    return _hat_is(target, hat, "event_whenflagclicked") \
        and target.op(block_id) in POSITION_SETTER_OPS


def _say_sound(target, hat, block_id, ancestors, sequence):
    index = sequence.index(block_id)
    if index + 2 >= len(sequence):
        return False
    sound, clear = sequence[index + 1], sequence[index + 2]
    empty = [1, [10, ""]]
    return target.op(block_id) == "looks_say" \
        and target.blocks[block_id]["inputs"].get("MESSAGE") not in (None, empty) \
        and target.op(sound) == "sound_playuntildone" \
        and target.op(clear) == "looks_say" \
        and target.blocks[clear]["inputs"].get("MESSAGE") == empty


def _timer(document):
    found = []
    for target in _targets(document):
        statements = list(target.all_statements())
        for _, loop, _, _ in statements:
            if target.op(loop) not in LOOP_OPS:
                continue
            if not any(target.op(child) == "control_wait" and target.numeric(child, "DURATION")
                       for child in target.descendants(loop)):
                continue
            variables = set()
            for _, block_id, ancestors, _ in statements:
                if loop not in ancestors:
                    continue
                if target.op(block_id) != "data_changevariableby" \
                        or not target.numeric(block_id, "VALUE"):
                    continue
                variable = target.blocks[block_id]["fields"]["VARIABLE"][0]
                if variable not in variables:
                    variables.add(variable)
                    found.append((target.name, block_id))
    return found


def _ordered_pair(target, ids, first, then):
    seen = False
    for block_id in ids:
        if seen and then(block_id):
            return True
        if first(block_id):
            seen = True
    return False


def _follower(is_target, mouse):
    def oracle(document):
        found = []
        for target in _targets(document):
            for _, loop, _, _ in target.all_statements():
                if target.op(loop) not in LOOP_OPS:
                    continue
                inside = target.descendants(loop)
                goes_to_mouse = mouse and any(
                    target.op(s) == "motion_goto" and target.menu(s, "TO") == "_mouse_"
                    for s in inside)
                points_and_moves = _ordered_pair(
                    target, inside,
                    lambda s: target.op(s) == "motion_pointtowards"
                    and is_target(target.menu(s, "TOWARDS")),
                    lambda s: target.op(s) == "motion_movesteps")
                if goes_to_mouse or points_and_moves:
                    found.append((target.name, loop))
        return found
    return oracle


def _key_script_oracle(predicate):
    def oracle(document):
        found = []
        for target in _targets(document):
            for hat, body in target.roots():
                if not _hat_is(target, hat, "event_whenkeypressed"):
                    continue
                ids = [block_id for block_id, _, _ in target.statements(body)]
                if predicate(target, ids):
                    found.append((target.name, hat))
        return found
    return oracle


def _directed(target, ids):
    return _ordered_pair(target, ids, lambda s: target.op(s) == "motion_pointindirection",
                         lambda s: target.op(s) == "motion_movesteps")


def _gliding(target, ids):
    return any(target.op(s) in ("motion_glidesecstoxy", "motion_glideto") for s in ids)


def _backdrop_switch(document):
    targets = _targets(document)
    switched = {target.menu(block_id, "BACKDROP") for target in targets
                for _, block_id, _, _ in target.all_statements()
                if target.op(block_id).startswith("looks_switchbackdropto")}
    return [(target.name, hat) for target in targets for hat, _ in target.roots()
            if _hat_is(target, hat, "event_whenbackdropswitchesto")
            and target.blocks[hat]["fields"]["BACKDROP"][0] in switched]


def _correct_broadcast(document):
    targets = _targets(document)
    received = {target.blocks[hat]["fields"]["BROADCAST_OPTION"][0] for target in targets
                for hat, _ in target.roots() if _hat_is(target, hat, "event_whenbroadcastreceived")}
    found = []
    for target in targets:
        for _, block_id, _, _ in target.all_statements():
            if target.op(block_id) in ("event_broadcast", "event_broadcastandwait"):
                message = target.blocks[block_id]["inputs"]["BROADCAST_INPUT"][1]
                if isinstance(message, list) and message[1] in received:
                    found.append((target.name, block_id))
    return found


def _parallelisation(document):
    groups = defaultdict(list)
    for target in _targets(document):
        for hat, _ in target.roots():
            if hat is not None:
                block = target.blocks[hat]
                fields = tuple(sorted((k, v[0]) for k, v in block["fields"].items()))
                groups[(block["opcode"], fields)].append((target.name, hat))
    return [item for group in groups.values() if len(group) > 1 for item in group]


def _definitions(target):
    for block_id, block in target.blocks.items():
        if block["opcode"] == "procedures_definition":
            prototype = target.blocks[block["inputs"]["custom_block"][1]]
            yield block_id, prototype["mutation"]


def _custom_block_usage(document):
    found = []
    for target in _targets(document):
        called = {block["mutation"]["proccode"] for block in target.blocks.values()
                  if block["opcode"] == "procedures_call"}
        found.extend((target.name, block_id) for block_id, mutation in _definitions(target)
                     if mutation["proccode"] in called)
    return found


def _matching_parameter(document):
    found = []
    for target in _targets(document):
        for block_id, mutation in _definitions(target):
            names = json.loads(mutation["argumentnames"])
            if not names:
                continue
            used = set()
            for statement, _, _ in target.statements(target.chain(target.blocks[block_id]["next"])):
                for name in target.blocks[statement]["inputs"]:
                    if name.startswith("SUBSTACK"):
                        continue
                    for child in target.subtree(target.reporter(statement, name)):
                        if target.op(child).startswith("argument_reporter"):
                            used.add(target.blocks[child]["fields"]["VALUE"][0])
            if used <= set(names):
                found.append((target.name, block_id))
    return found


def _list_usage(document):
    found = []
    for target in _targets(document):
        for block_id, block in target.blocks.items():
            if block["opcode"] in LIST_OPS and block["fields"]["LIST"][0] in target.list_names:
                found.append((target.name, block_id))
            for value in block["inputs"].values():
                if isinstance(value[1], list) and value[1][0] == 13 \
                        and value[1][1] in target.list_names:
                    found.append((target.name, block_id))
    return found


def _operator_oracle(predicate):
    def oracle(document):
        found = []
        for target in _targets(document):
            for block_id, block in target.blocks.items():
                if not block["shadow"] and predicate(target, block_id):
                    found.append((target.name, block_id))
        return found
    return oracle


def _boolean_expression(target, block_id):
    if target.op(block_id) not in ("operator_and", "operator_or", "operator_not"):
        return False
    comparisons = [child for child in target.subtree(block_id)
                   if target.op(child) in COMPARISON_OPS]
    return bool(comparisons) and not any(
        target.literal(c, "OPERAND1") and target.literal(c, "OPERAND2") for c in comparisons)


def _useful_position_check(target, block_id):
    if target.op(block_id) not in ("operator_gt", "operator_lt"):
        return False
    return any(target.subtree_ops(target.reporter(block_id, name)) & POSITION_OPS
               for name in ("OPERAND1", "OPERAND2"))


ORACLES = {
    "backdrop_switch": _backdrop_switch,
    "boolean_expression": _operator_oracle(_boolean_expression),
    "collision": _statement_oracle(_collision),
    "conditional_inside_loop": _statement_oracle(_conditional_inside_loop),
    "controlled_broadcast_or_stop": _statement_oracle(_controlled_broadcast),
    "coordination": _statement_oracle(_coordination),
    "correct_broadcast": _correct_broadcast,
    "custom_block_usage": _custom_block_usage,
    "directed_motion": _key_script_oracle(_directed),
    "gliding_motion": _key_script_oracle(_gliding),
    "initialisation_of_looks": _statement_oracle(_initialisation_of_looks),
    "initialisation_of_positions": _statement_oracle(_initialisation_of_positions),
    "list_usage": _list_usage,
    "loop_sensing": _statement_oracle(_loop_sensing),
    "matching_parameter": _matching_parameter,
    "mouse_follower": _follower(lambda value: value == "_mouse_", mouse=True),
    "movement_in_loop": _statement_oracle(_movement_in_loop),
    "nested_conditional_checks": _statement_oracle(_nested_conditional),
    "nested_loops": _statement_oracle(_nested_loop),
    "object_follower": _follower(lambda value: value not in SPECIAL_MENU_VALUES, mouse=False),
    "parallelisation": _parallelisation,
    "say_sound_synchronisation": _statement_oracle(_say_sound),
    "timer": _timer,
    "useful_position_check": _operator_oracle(_useful_position_check),
    "valid_termination": _statement_oracle(_valid_termination),
}


def _n_blocks(document):
    return sum(1 for target in document["targets"]
               for block in target["blocks"].values() if not block["shadow"])


def random_document(seed):
    for attempt in itertools.count():
        document = ProgramGenerator([seed, attempt]).project().build()
        if _n_blocks(document) <= MAX_BLOCKS:
            return document


@pytest.fixture(scope="module")
def programs():
    documents = [random_document(seed) for seed in range(N_PROGRAMS)]
    return [(document, build_ast(parse_project(document))) for document in documents]


def test_oracles_cover_every_finder():
    assert set(ORACLES) == set(FINDER_ZOO)


def test_programs_are_small(programs):
    assert all(_n_blocks(document) <= MAX_BLOCKS for document, _ in programs)
    # seeded
    assert random_document(7) == random_document(7)


@pytest.mark.parametrize('name', sorted(ORACLES))
def test_finder_matches_oracle(programs, name):
    found_any = False
    for seed, (document, ast) in enumerate(programs):
        expected = Counter(ORACLES[name](document))
        actual = Counter((instance.target_name, instance.anchor_block_id)
                         for instance in FINDER_ZOO[name](ast))
        assert actual == expected, f"seed {seed}"
        found_any = found_any or bool(actual)
    assert found_any, f"no random program holds a {name} instance"
