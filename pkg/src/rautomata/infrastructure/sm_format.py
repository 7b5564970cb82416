"""The `.sm` text format for restricted multistack machines.

    name: anbn
    states: p0 pa f
    input: a b
    stack1: X0 C
    stack2: Y0 A2
    initial: p0 X0 Y0
    final: f
    r1: p0, a, X0, Y0 -> pa, C X0, A2 Y0

Rules read `label: state, symbol, top1, ..., topk -> state, repl1, ..., replk`
where `λ` (or `-`) is the lambda move / empty replacement and the leftmost
symbol of a replacement becomes the new top.
"""

from __future__ import annotations

import logging
import re
from typing import Dict, Iterable, List, Optional, Tuple

from ..core.errors import FormatError
from ..engine.multiset import Symbol, parse_symbols
from ..machines.stackmachine import MachineRule, StackMachine
from .lines import Entry, iter_entries, require

logger = logging.getLogger(__name__)

_STACK_KEY = re.compile(r"stack(\d+)")
_LAMBDA = ("λ", "-")


def _plain(symbols: Tuple[Symbol, ...], line: int, column: int) -> Tuple[Symbol, ...]:
    if any(s.hat for s in symbols):
        raise FormatError("hatted symbols are not allowed in machine files", line, column)
    return symbols


def _header_symbols(entry: Entry) -> Tuple[Symbol, ...]:
    symbols = parse_symbols(entry.value, entry.line, entry.value_column - 1)
    return _plain(symbols, entry.line, entry.value_column)


def _names(entry: Entry) -> List[str]:
    return [s.name for s in _header_symbols(entry)]


def parse_sm(text: str) -> StackMachine:
    headers: Dict[str, Entry] = {}
    stacks: Dict[int, Entry] = {}
    rule_entries: List[Entry] = []
    for entry in iter_entries(text):
        if "->" in entry.value:
            rule_entries.append(entry)
            continue
        match = _STACK_KEY.fullmatch(entry.key)
        if match:
            index = int(match.group(1))
            if index in stacks:
                raise FormatError(f"duplicate '{entry.key}:' declaration", entry.line, entry.key_column)
            stacks[index] = entry
        elif entry.key in ("name", "states", "input", "initial", "final"):
            if entry.key in headers:
                raise FormatError(f"duplicate '{entry.key}:' declaration", entry.line, entry.key_column)
            headers[entry.key] = entry
        else:
            raise FormatError(f"unknown declaration '{entry.key}'", entry.line, entry.key_column)

    if sorted(stacks) != list(range(1, len(stacks) + 1)) or not stacks:
        raise FormatError("stacks must be declared as stack1, stack2, ...", 1, 1)
    k = len(stacks)
    states = _names(require(headers, "states"))
    inputs = _header_symbols(require(headers, "input"))
    alphabets = tuple(frozenset(_header_symbols(stacks[i])) for i in range(1, k + 1))
    initial = require(headers, "initial")
    initial_names = _names(initial)
    if len(initial_names) != k + 1:
        raise FormatError(
            f"'initial:' needs a state and {k} bottom symbols", initial.line, initial.value_column
        )
    final = require(headers, "final")
    final_names = _names(final)
    if len(final_names) != 1:
        raise FormatError("exactly one final state expected", final.line, final.value_column)

    rules = tuple(_parse_rule(entry, k) for entry in rule_entries)
    machine = StackMachine(
        states=frozenset(states),
        input_alphabet=frozenset(inputs),
        stack_alphabets=alphabets,
        rules=rules,
        initial_state=initial_names[0],
        bottoms=tuple(Symbol(n) for n in initial_names[1:]),
        final_state=final_names[0],
        name=headers["name"].value.strip() if "name" in headers else "",
    )
    logger.debug("parsed machine %s with %d rules", machine.name, len(rules))
    return machine


def _single(text: str, line: int, column: int) -> str:
    token = text.strip()
    if not token or any(ch.isspace() for ch in token):
        raise FormatError(f"expected a single token, got {text.strip()!r}", line, column)
    return token


def _parse_rule(entry: Entry, k: int) -> MachineRule:
    arrow = entry.value.find("->")
    left = entry.value[:arrow]
    right = entry.value[arrow + 2 :]
    right_column = entry.value_column + arrow + 2
    left_parts = _split(left, entry.value_column)
    right_parts = _split(right, right_column)
    if len(left_parts) != k + 2:
        raise FormatError(f"left side needs state, symbol and {k} tops", entry.line, entry.value_column)
    if len(right_parts) != k + 1:
        raise FormatError(f"right side needs state and {k} replacements", entry.line, right_column)

    state = _single(left_parts[0][0], entry.line, left_parts[0][1])
    raw_symbol, symbol_column = left_parts[1]
    symbol: Optional[Symbol] = None
    if raw_symbol.strip() not in _LAMBDA:
        symbol = Symbol.parse(_single(raw_symbol, entry.line, symbol_column), entry.line, symbol_column)
    tops = tuple(
        Symbol.parse(_single(text, entry.line, column), entry.line, column)
        for text, column in left_parts[2:]
    )
    target = _single(right_parts[0][0], entry.line, right_parts[0][1])
    replacements = tuple(
        parse_symbols(text, entry.line, column - 1) for text, column in right_parts[1:]
    )
    for s in (symbol, *tops, *(x for r in replacements for x in r)):
        if s is not None and s.hat:
            raise FormatError("hatted symbols are not allowed in machine files", entry.line, entry.value_column)
    return MachineRule(entry.key, state, symbol, tops, target, replacements)


def _split(text: str, column: int) -> List[Tuple[str, int]]:
    parts = []
    for piece in text.split(","):
        parts.append((piece, column))
        column += len(piece) + 1
    return parts


def format_sm(machine: StackMachine) -> str:
    def symbols(items: Iterable[Symbol]) -> str:
        return " ".join(str(s) for s in sorted(items)) or "-"

    lines = []
    if machine.name:
        lines.append(f"name: {machine.name}")
    lines.append(f"states: {' '.join(sorted(machine.states))}")
    lines.append(f"input: {symbols(machine.input_alphabet)}")
    for i, alphabet in enumerate(machine.stack_alphabets, start=1):
        lines.append(f"stack{i}: {symbols(alphabet)}")
    bottoms = " ".join(str(z) for z in machine.bottoms)
    lines.append(f"initial: {machine.initial_state} {bottoms}")
    lines.append(f"final: {machine.final_state}")
    lines.extend(str(rule) for rule in machine.rules)
    return "\n".join(lines) + "\n"
