"""Small vocabulary of Scratch 3 blocks for building projects in code

Every function returns a :class:`Block` description; the
:class:`~scratchperfume.datasets.builder.ProjectBuilder` turns them into
sb3 block records. Input values follow these conventions:

* ``int`` or ``float`` becomes a number shadow, ``str`` a text shadow
* :class:`Variable`, :class:`ListContents` and :class:`Message` become the
  compressed primitives of the sb3 format
* a :class:`Block` is plugged into the input (menus are shadow blocks)
* ``None`` leaves the input empty
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass
class Block:
    opcode: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    fields: Dict[str, Any] = field(default_factory=dict)
    substacks: Dict[str, List["Block"]] = field(default_factory=dict)
    shadow: bool = False
    proccode: Optional[str] = None
    arguments: Tuple[Any, ...] = ()


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class ListContents:
    name: str


@dataclass(frozen=True)
class Message:
    name: str


@dataclass(frozen=True)
class Color:
    value: str


MOUSE = "_mouse_"
RANDOM = "_random_"
EDGE = "_edge_"

BOOLEAN_OPCODES = frozenset([
    "operator_gt", "operator_lt", "operator_equals", "operator_and", "operator_or",
    "operator_not", "sensing_touchingobject", "sensing_touchingcolor",
    "sensing_coloristouchingcolor", "sensing_keypressed", "sensing_mousedown",
    "argument_reporter_boolean", "data_listcontainsitem",
])


def menu(opcode, field_name, value):
    return Block(opcode, fields={field_name: value}, shadow=True)


# Hats

def when_flag_clicked():
    return Block("event_whenflagclicked")


def when_key_pressed(key="space"):
    return Block("event_whenkeypressed", fields={"KEY_OPTION": key})


def when_i_receive(message):
    return Block("event_whenbroadcastreceived", fields={"BROADCAST_OPTION": Message(message)})


def when_backdrop_switches_to(backdrop):
    return Block("event_whenbackdropswitchesto", fields={"BACKDROP": backdrop})


def when_sprite_clicked():
    return Block("event_whenthisspriteclicked")


def when_stage_clicked():
    return Block("event_whenstageclicked")


def when_i_start_as_clone():
    return Block("control_start_as_clone")


# Control

def forever(body=()):
    return Block("control_forever", substacks={"SUBSTACK": list(body)})


def repeat(times, body=()):
    return Block("control_repeat", inputs={"TIMES": times}, substacks={"SUBSTACK": list(body)})


def repeat_until(condition, body=()):
    return Block("control_repeat_until", inputs={"CONDITION": condition},
                 substacks={"SUBSTACK": list(body)})


def if_(condition, body=()):
    return Block("control_if", inputs={"CONDITION": condition}, substacks={"SUBSTACK": list(body)})


def if_else(condition, then=(), orelse=()):
    return Block("control_if_else", inputs={"CONDITION": condition},
                 substacks={"SUBSTACK": list(then), "SUBSTACK2": list(orelse)})


def wait(seconds):
    return Block("control_wait", inputs={"DURATION": seconds})


def wait_until(condition):
    return Block("control_wait_until", inputs={"CONDITION": condition})


def stop(option="all"):
    return Block("control_stop", fields={"STOP_OPTION": option})


def create_clone(target="_myself_"):
    return Block("control_create_clone_of",
                 inputs={"CLONE_OPTION": menu("control_create_clone_of_menu", "CLONE_OPTION", target)})


# Events

def broadcast(message):
    return Block("event_broadcast", inputs={"BROADCAST_INPUT": Message(message)})


def broadcast_and_wait(message):
    return Block("event_broadcastandwait", inputs={"BROADCAST_INPUT": Message(message)})


# Motion

def move(steps=10):
    return Block("motion_movesteps", inputs={"STEPS": steps})


def turn_right(degrees=15):
    return Block("motion_turnright", inputs={"DEGREES": degrees})


def point_in_direction(direction=90):
    return Block("motion_pointindirection", inputs={"DIRECTION": direction})


def point_towards(target=MOUSE):
    return Block("motion_pointtowards",
                 inputs={"TOWARDS": menu("motion_pointtowards_menu", "TOWARDS", target)})


def go_to_xy(x=0, y=0):
    return Block("motion_gotoxy", inputs={"X": x, "Y": y})


def go_to(target=RANDOM):
    return Block("motion_goto", inputs={"TO": menu("motion_goto_menu", "TO", target)})


def glide_to_xy(secs=1, x=0, y=0):
    return Block("motion_glidesecstoxy", inputs={"SECS": secs, "X": x, "Y": y})


def glide_to(secs=1, target=RANDOM):
    return Block("motion_glideto",
                 inputs={"SECS": secs, "TO": menu("motion_glideto_menu", "TO", target)})


def set_x(x=0):
    return Block("motion_setx", inputs={"X": x})


def set_y(y=0):
    return Block("motion_sety", inputs={"Y": y})


def change_x(dx=10):
    return Block("motion_changexby", inputs={"DX": dx})


def change_y(dy=10):
    return Block("motion_changeyby", inputs={"DY": dy})


def bounce():
    return Block("motion_ifonedgebounce")


# Looks

def switch_costume(costume="costume1"):
    return Block("looks_switchcostumeto",
                 inputs={"COSTUME": menu("looks_costume", "COSTUME", costume)})


def switch_backdrop(backdrop="backdrop1"):
    return Block("looks_switchbackdropto",
                 inputs={"BACKDROP": menu("looks_backdrops", "BACKDROP", backdrop)})


def switch_backdrop_and_wait(backdrop="backdrop1"):
    return Block("looks_switchbackdroptoandwait",
                 inputs={"BACKDROP": menu("looks_backdrops", "BACKDROP", backdrop)})


def set_size(size=100):
    return Block("looks_setsizeto", inputs={"SIZE": size})


def set_effect(effect="COLOR", value=0):
    return Block("looks_seteffectto", inputs={"VALUE": value}, fields={"EFFECT": effect})


def clear_effects():
    return Block("looks_cleargraphiceffects")


def show():
    return Block("looks_show")


def hide():
    return Block("looks_hide")


def next_costume():
    return Block("looks_nextcostume")


def say(message="Hello!"):
    return Block("looks_say", inputs={"MESSAGE": message})


def say_for_secs(message="Hello!", secs=2):
    return Block("looks_sayforsecs", inputs={"MESSAGE": message, "SECS": secs})


# Sound

def play_sound(sound="Meow"):
    return Block("sound_play", inputs={"SOUND_MENU": menu("sound_sounds_menu", "SOUND_MENU", sound)})


def play_sound_until_done(sound="Meow"):
    return Block("sound_playuntildone",
                 inputs={"SOUND_MENU": menu("sound_sounds_menu", "SOUND_MENU", sound)})


# Variables and lists

def set_variable(name, value=0):
    return Block("data_setvariableto", inputs={"VALUE": value}, fields={"VARIABLE": Variable(name)})


def change_variable(name, value=1):
    return Block("data_changevariableby", inputs={"VALUE": value},
                 fields={"VARIABLE": Variable(name)})


def variable(name):
    """A variable reporter block (not compressed into a primitive)"""
    return Block("data_variable", fields={"VARIABLE": Variable(name)})


def add_to_list(name, item="thing"):
    return Block("data_addtolist", inputs={"ITEM": item}, fields={"LIST": ListContents(name)})


def delete_all_of_list(name):
    return Block("data_deletealloflist", fields={"LIST": ListContents(name)})


def item_of_list(name, index=1):
    return Block("data_itemoflist", inputs={"INDEX": index}, fields={"LIST": ListContents(name)})


def length_of_list(name):
    return Block("data_lengthoflist", fields={"LIST": ListContents(name)})


# Operators

def gt(left, right):
    return Block("operator_gt", inputs={"OPERAND1": left, "OPERAND2": right})


def lt(left, right):
    return Block("operator_lt", inputs={"OPERAND1": left, "OPERAND2": right})


def equals(left, right):
    return Block("operator_equals", inputs={"OPERAND1": left, "OPERAND2": right})


def and_(left, right):
    return Block("operator_and", inputs={"OPERAND1": left, "OPERAND2": right})


def or_(left, right):
    return Block("operator_or", inputs={"OPERAND1": left, "OPERAND2": right})


def not_(operand):
    return Block("operator_not", inputs={"OPERAND": operand})


def add(left, right):
    return Block("operator_add", inputs={"NUM1": left, "NUM2": right})


# Sensing

def touching(target=EDGE):
    return Block("sensing_touchingobject",
                 inputs={"TOUCHINGOBJECTMENU": menu("sensing_touchingobjectmenu",
                                                    "TOUCHINGOBJECTMENU", target)})


def touching_color(color="#ff0000"):
    return Block("sensing_touchingcolor", inputs={"COLOR": Color(color)})


def key_pressed(key="space"):
    return Block("sensing_keypressed",
                 inputs={"KEY_OPTION": menu("sensing_keyoptions", "KEY_OPTION", key)})


def mouse_down():
    return Block("sensing_mousedown")


def distance_to(target=MOUSE):
    return Block("sensing_distanceto",
                 inputs={"DISTANCETOMENU": menu("sensing_distancetomenu", "DISTANCETOMENU", target)})


def x_position():
    return Block("motion_xposition")


def y_position():
    return Block("motion_yposition")


# Custom blocks

def call(proccode, *arguments):
    return Block("procedures_call", proccode=proccode, arguments=tuple(arguments))


def argument(name):
    return Block("argument_reporter_string_number", fields={"VALUE": name})


def boolean_argument(name):
    return Block("argument_reporter_boolean", fields={"VALUE": name})
