"""Perfumes about events, messages and green flag scripts"""
from collections import defaultdict

from ..program import nodes as n
from ..program.nodes import HatKind
from ..program.traversal import iter_roots, iter_statements
from . import _matching as m
from .kinds import PerfumeKind


def _scripts_with_hat(p, kind):
    for target_index, target, root in iter_roots(p):
        if m.has_hat(root, kind):
            yield target_index, target, root


def find_backdrop_switch(p):
    """``when backdrop switches to`` hats whose backdrop some block switches to

    Only backdrop names picked from the menu count, switches to a computed
    backdrop are ignored.
    """
    switched = {visit.stmt.backdrop for visit in iter_statements(p)
                if isinstance(visit.stmt, n.SwitchBackdrop) and isinstance(visit.stmt.backdrop, str)}
    return m.ordered(
        m.hat_instance(PerfumeKind.BACKDROP_SWITCH, target_index, target, script)
        for target_index, target, script in _scripts_with_hat(p, HatKind.BACKDROP_SWITCHES_TO)
        if script.hat.value in switched
    )


def _message_name(broadcast):
    message = broadcast.message
    if isinstance(message, n.MessageRef):
        return message.name
    return None


def find_correct_broadcast(p):
    """Broadcasts of a message that some ``when I receive`` script waits for"""
    received = {script.hat.value for _, _, script
                in _scripts_with_hat(p, HatKind.BROADCAST_RECEIVED)}
    instances = []
    for visit in iter_statements(p):
        if not isinstance(visit.stmt, n.Broadcast):
            continue
        name = _message_name(visit.stmt)
        if name is not None and name in received:
            instances.append(m.instance(PerfumeKind.CORRECT_BROADCAST, visit,
                                        visit.stmt.block_id, detail=name))
    return m.ordered(instances)


def find_parallelisation(p):
    """Scripts sharing their hat with at least one other script of the project"""
    groups = defaultdict(list)
    for target_index, target, root in iter_roots(p):
        hat = getattr(root, "hat", None)
        if hat is not None:
            groups[hat.signature].append((target_index, target, root))

    instances = []
    for signature, scripts in groups.items():
        if len(scripts) < 2:
            continue
        detail = ":".join(str(part) for part in signature if part)
        instances.extend(
            m.hat_instance(PerfumeKind.PARALLELISATION, target_index, target, script, detail=detail)
            for target_index, target, script in scripts
        )
    return m.ordered(instances)


def find_initialisation_of_looks(p):
    """Looks setters in ``when green flag clicked`` scripts, once per setter"""
    return m.ordered(
        m.instance(PerfumeKind.INITIALISATION_OF_LOOKS, visit, visit.stmt.block_id,
                   detail=type(visit.stmt).__name__)
        for visit in iter_statements(p)
        if isinstance(visit.stmt, m.LOOKS_SETTERS) and m.has_hat(visit, HatKind.GREEN_FLAG)
    )


def _is_empty_text(expr):
    return isinstance(expr, n.StringLiteral) and expr.text == ""


def find_say_sound_synchronisation(p):
    """``say``, ``play sound until done``, then an empty ``say`` to clear the bubble"""
    instances = []
    for visit in iter_statements(p):
        first = visit.stmt
        sequence, index = visit.sequence, visit.index
        if index + 2 >= len(sequence) or not isinstance(first, n.Say):
            continue
        sound, clear = sequence[index + 1], sequence[index + 2]
        if (not _is_empty_text(first.message) and not isinstance(first.message, n.Empty)
                and isinstance(sound, n.PlaySound) and sound.until_done
                and isinstance(clear, n.Say) and _is_empty_text(clear.message)):
            instances.append(m.instance(PerfumeKind.SAY_SOUND_SYNCHRONISATION, visit,
                                        first.block_id))
    return m.ordered(instances)
