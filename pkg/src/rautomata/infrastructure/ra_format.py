"""The `.ra` text format for reaction automata.

    name: ex2_pow2
    background: a b c d e f
    input: a
    initial: d
    final: f
    a1: a^2 | - | b

Reaction lines read `label: reactant | inhibitor | product`; the inhibitor is a
plain symbol list. `#` starts a comment.
"""

from __future__ import annotations

import logging
from typing import Dict, List

from ..core.errors import FormatError
from ..engine.multiset import EMPTY_TOKEN, Symbol, format_multiset, parse_multiset, parse_symbols
from ..engine.reactions import Reaction, ReactionAutomaton
from .lines import Entry, iter_entries, require

logger = logging.getLogger(__name__)

HEADER_KEYS = ("name", "background", "input", "initial", "final")


def parse_ra(text: str, validate: bool = True) -> ReactionAutomaton:
    headers: Dict[str, Entry] = {}
    reactions: List[Reaction] = []
    for entry in iter_entries(text):
        if "|" in entry.value:
            reactions.append(_parse_reaction(entry))
            continue
        if entry.key not in HEADER_KEYS:
            raise FormatError(f"unknown declaration '{entry.key}'", entry.line, entry.key_column)
        if entry.key in headers:
            raise FormatError(f"duplicate '{entry.key}:' declaration", entry.line, entry.key_column)
        headers[entry.key] = entry

    background = require(headers, "background")
    inputs = require(headers, "input")
    initial = require(headers, "initial")
    final = require(headers, "final")
    final_symbols = parse_symbols(final.value, final.line, final.value_column - 1)
    if len(final_symbols) != 1:
        raise FormatError("exactly one final symbol expected", final.line, final.value_column)

    automaton = ReactionAutomaton(
        background=frozenset(parse_symbols(background.value, background.line, background.value_column - 1)),
        input_alphabet=frozenset(parse_symbols(inputs.value, inputs.line, inputs.value_column - 1)),
        reactions=tuple(reactions),
        initial=parse_multiset(initial.value, initial.line, initial.value_column - 1),
        final=final_symbols[0],
        name=headers["name"].value.strip() if "name" in headers else "",
    )
    logger.debug("parsed %s", automaton.describe())
    return automaton.validated() if validate else automaton


def _parse_reaction(entry: Entry) -> Reaction:
    parts = entry.split("|")
    if len(parts) != 3:
        raise FormatError(
            "reaction needs 'reactant | inhibitor | product'", entry.line, entry.value_column
        )
    (reactant, rc), (inhibitor, ic), (product, pc) = parts
    return Reaction(
        label=entry.key,
        reactant=parse_multiset(reactant, entry.line, rc - 1),
        inhibitor=frozenset(parse_symbols(inhibitor, entry.line, ic - 1)),
        product=parse_multiset(product, entry.line, pc - 1),
    )


def _symbols(symbols: frozenset[Symbol]) -> str:
    return " ".join(str(s) for s in sorted(symbols)) or EMPTY_TOKEN


def format_ra(automaton: ReactionAutomaton) -> str:
    lines = []
    if automaton.name:
        lines.append(f"name: {automaton.name}")
    lines.append(f"background: {_symbols(automaton.background)}")
    lines.append(f"input: {_symbols(automaton.input_alphabet)}")
    lines.append(f"initial: {format_multiset(automaton.initial)}")
    lines.append(f"final: {automaton.final}")
    for r in automaton.reactions:
        lines.append(
            f"{r.label}: {format_multiset(r.reactant)} | {_symbols(r.inhibitor)} | {format_multiset(r.product)}"
        )
    return "\n".join(lines) + "\n"
