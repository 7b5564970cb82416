"""Restricted k-stack machines.

Restrictions: all input is read with non-lambda moves before any lambda move,
every stack has its own alphabet and keeps its bottom symbol, and the machine
halts as soon as it enters its single final state. The syntactic parts are
checked by `validate_restricted`; the run-time parts by `RunMonitor`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.contracts import Outcome
from ..core.diagnostics import Diagnostic
from ..core.errors import InputSymbolError, RestrictionViolation
from ..engine.multiset import Symbol

logger = logging.getLogger(__name__)

Stack = Tuple[Symbol, ...]


@dataclass(frozen=True, slots=True)
class MachineRule:
    label: str
    state: str
    symbol: Optional[Symbol]  # None is a lambda move
    tops: Tuple[Symbol, ...]
    target: str
    replacements: Tuple[Stack, ...]

    @property
    def is_lambda(self) -> bool:
        return self.symbol is None

    def __str__(self) -> str:
        def word(symbols: Stack) -> str:
            return " ".join(str(s) for s in symbols) if symbols else "λ"

        head = ", ".join([self.state, str(self.symbol) if self.symbol is not None else "λ"] + [str(t) for t in self.tops])
        tail = ", ".join([self.target] + [word(r) for r in self.replacements])
        return f"{self.label}: {head} -> {tail}"


@dataclass(frozen=True, slots=True)
class StackMachine:
    states: frozenset[str]
    input_alphabet: frozenset[Symbol]
    stack_alphabets: Tuple[frozenset[Symbol], ...]
    rules: Tuple[MachineRule, ...]
    initial_state: str
    bottoms: Tuple[Symbol, ...]
    final_state: str
    name: str = ""
    _table: Dict[Tuple[str, Optional[Symbol], Tuple[Symbol, ...]], MachineRule] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        table = {}
        for rule in self.rules:
            table.setdefault((rule.state, rule.symbol, rule.tops), rule)
        object.__setattr__(self, "_table", table)

    @property
    def k(self) -> int:
        return len(self.stack_alphabets)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(rule.label for rule in self.rules)

    def rule(self, label: str) -> MachineRule:
        for rule in self.rules:
            if rule.label == label:
                return rule
        raise KeyError(f"unknown rule label: {label}")

    def lookup(
        self, state: str, symbol: Optional[Symbol], tops: Tuple[Symbol, ...]
    ) -> Optional[MachineRule]:
        return self._table.get((state, symbol, tops))

    def initial_config(self, w: Sequence[Symbol]) -> "MachineConfig":
        for position, s in enumerate(w, start=1):
            if s not in self.input_alphabet:
                raise InputSymbolError(f"symbol {s} at position {position} is not an input symbol")
        return MachineConfig(self.initial_state, tuple(w), tuple((z,) for z in self.bottoms))


@dataclass(frozen=True, slots=True)
class MachineConfig:
    state: str
    remaining: Tuple[Symbol, ...]
    stacks: Tuple[Stack, ...]

    @property
    def tops(self) -> Tuple[Symbol, ...]:
        return tuple(stack[0] for stack in self.stacks)

    def __str__(self) -> str:
        rest = "".join(str(s) for s in self.remaining) or "λ"
        stacks = " | ".join(" ".join(str(s) for s in stack) for stack in self.stacks)
        return f"({self.state}, {rest}, {stacks})"


class Halt(Enum):
    """Why a configuration has no successor."""

    ACCEPT = "accept"
    REJECT = "reject"


def validate_restricted(machine: StackMachine) -> List[Diagnostic]:
    problems: List[Diagnostic] = []
    k = machine.k
    if k < 1:
        problems.append(Diagnostic("no-stacks", "machine needs at least one stack"))
    if len(machine.bottoms) != k:
        problems.append(Diagnostic("bottoms", f"expected {k} bottom symbols, got {len(machine.bottoms)}"))
    for i, j in combinations(range(k), 2):
        shared = machine.stack_alphabets[i] & machine.stack_alphabets[j]
        if shared:
            names = " ".join(str(s) for s in sorted(shared))
            problems.append(
                Diagnostic("stack-alphabets-overlap", f"stack alphabets share {names}", f"stack{i + 1}/stack{j + 1}")
            )
    for i, (bottom, alphabet) in enumerate(zip(machine.bottoms, machine.stack_alphabets), start=1):
        if bottom not in alphabet:
            problems.append(Diagnostic("bottom-outside-alphabet", f"bottom {bottom} not in stack{i}", str(bottom)))
    for state, role in ((machine.initial_state, "initial"), (machine.final_state, "final")):
        if state not in machine.states:
            problems.append(Diagnostic("unknown-state", f"{role} state not declared", state))

    seen_labels: set[str] = set()
    seen_keys: Dict[Tuple[str, Optional[Symbol], Tuple[Symbol, ...]], str] = {}
    lambda_keys: Dict[Tuple[str, Tuple[Symbol, ...]], str] = {}
    input_keys: Dict[Tuple[str, Tuple[Symbol, ...]], str] = {}
    for rule in machine.rules:
        if rule.label in seen_labels:
            problems.append(Diagnostic("duplicate-label", "duplicate rule label", rule.label))
        seen_labels.add(rule.label)
        problems.extend(_rule_shape(machine, rule))

        key = (rule.state, rule.symbol, rule.tops)
        if key in seen_keys:
            problems.append(
                Diagnostic("nondeterministic", f"same left side as {seen_keys[key]}", rule.label)
            )
        seen_keys.setdefault(key, rule.label)
        side = lambda_keys if rule.is_lambda else input_keys
        other = input_keys if rule.is_lambda else lambda_keys
        side.setdefault((rule.state, rule.tops), rule.label)
        if (rule.state, rule.tops) in other:
            problems.append(
                Diagnostic(
                    "lambda-input-choice",
                    f"lambda and input moves both defined (with {other[(rule.state, rule.tops)]})",
                    rule.label,
                )
            )
        if rule.state == machine.final_state:
            problems.append(Diagnostic("final-not-halting", "rule leaves the final state", rule.label))
    problems.extend(_input_coverage(machine, seen_keys, input_keys))
    return problems


def _input_coverage(
    machine: StackMachine,
    seen_keys: Dict[Tuple[str, Optional[Symbol], Tuple[Symbol, ...]], str],
    input_keys: Dict[Tuple[str, Tuple[Symbol, ...]], str],
) -> List[Diagnostic]:
    """A reading configuration must move on every input symbol.

    Getting stuck mid-input would reject here, but a compiled automaton keeps
    the unread symbol and may consume it several steps later.
    """
    problems: List[Diagnostic] = []
    for (state, tops), label in input_keys.items():
        missing = sorted(a for a in machine.input_alphabet if (state, a, tops) not in seen_keys)
        if missing:
            where = " ".join([state, *(str(t) for t in tops)])
            names = " ".join(str(a) for a in missing)
            problems.append(Diagnostic("input-incomplete", f"no move on {names} in {where}", label))
    return problems


def _rule_shape(machine: StackMachine, rule: MachineRule) -> List[Diagnostic]:
    problems: List[Diagnostic] = []
    for state in (rule.state, rule.target):
        if state not in machine.states:
            problems.append(Diagnostic("unknown-state", f"state {state} not declared", rule.label))
    if rule.symbol is not None and rule.symbol not in machine.input_alphabet:
        problems.append(Diagnostic("unknown-input", f"{rule.symbol} is not an input symbol", rule.label))
    if len(rule.tops) != machine.k or len(rule.replacements) != machine.k:
        problems.append(Diagnostic("arity", f"rule must address {machine.k} stacks", rule.label))
        return problems
    for i, (top, repl) in enumerate(zip(rule.tops, rule.replacements)):
        alphabet = machine.stack_alphabets[i]
        for s in (top, *repl):
            if s not in alphabet:
                problems.append(Diagnostic("unknown-stack-symbol", f"{s} not in stack{i + 1}", rule.label))
        bottom = machine.bottoms[i] if i < len(machine.bottoms) else None
        if bottom is None:
            continue
        if top == bottom:
            if not repl or repl[-1] != bottom or bottom in repl[:-1]:
                problems.append(
                    Diagnostic("bottom-rewritten", f"stack{i + 1} must keep {bottom} at the bottom", rule.label)
                )
        elif bottom in repl:
            problems.append(Diagnostic("bottom-pushed", f"{bottom} pushed above the bottom", rule.label))
    return problems


class RunMonitor:
    """Raises RestrictionViolation when a run breaks a behavioral restriction."""

    def __init__(self, machine: StackMachine) -> None:
        self.machine = machine
        self.lambda_seen = False

    def check(self, config: MachineConfig, rule: MachineRule, after: MachineConfig) -> None:
        if config.state == self.machine.final_state:
            raise RestrictionViolation("iii", f"{rule.label} applied after entering the final state")
        if rule.is_lambda:
            self.lambda_seen = True
        elif self.lambda_seen:
            raise RestrictionViolation("ii", f"non-lambda move {rule.label} after a lambda move")
        for i, stack in enumerate(after.stacks):
            bottom = self.machine.bottoms[i]
            if not stack:
                raise RestrictionViolation("iii", f"{rule.label} empties stack{i + 1}")
            if stack[-1] != bottom or bottom in stack[:-1]:
                raise RestrictionViolation("iii", f"{rule.label} moves {bottom} off the bottom of stack{i + 1}")


def applicable(machine: StackMachine, config: MachineConfig) -> Optional[MachineRule]:
    tops = config.tops
    if config.remaining:
        rule = machine.lookup(config.state, config.remaining[0], tops)
        if rule is not None:
            return rule
    return machine.lookup(config.state, None, tops)


def apply_rule(machine: StackMachine, config: MachineConfig, rule: MachineRule) -> MachineConfig:
    remaining = config.remaining if rule.is_lambda else config.remaining[1:]
    stacks = tuple(repl + stack[1:] for repl, stack in zip(rule.replacements, config.stacks))
    return MachineConfig(rule.target, remaining, stacks)


def step(
    machine: StackMachine, config: MachineConfig, monitor: Optional[RunMonitor] = None
) -> Union[Tuple[MachineRule, MachineConfig], Halt]:
    if config.state == machine.final_state:
        return Halt.ACCEPT
    if any(not stack for stack in config.stacks):
        raise RestrictionViolation("iii", f"empty stack in {config}")
    rule = applicable(machine, config)
    if rule is None:
        return Halt.REJECT
    after = apply_rule(machine, config, rule)
    if monitor is not None:
        monitor.check(config, rule, after)
    return rule, after


@dataclass(frozen=True, slots=True)
class MachineRun:
    outcome: Outcome
    configs: Tuple[MachineConfig, ...]
    rules: Tuple[MachineRule, ...]

    @property
    def steps(self) -> int:
        return len(self.rules)


def run(machine: StackMachine, w: Sequence[Symbol], max_steps: int = 10_000) -> MachineRun:
    """Run to a halt; accepted iff the final state is entered with all input read."""
    config = machine.initial_config(w)
    monitor = RunMonitor(machine)
    configs = [config]
    rules: List[MachineRule] = []
    while True:
        if config.state == machine.final_state:
            outcome = Outcome.ACCEPTED if not config.remaining else Outcome.REJECTED
            break
        if len(rules) >= max_steps:
            outcome = Outcome.UNDECIDED
            break
        result = step(machine, config, monitor)
        if result is Halt.REJECT:
            outcome = Outcome.REJECTED
            break
        assert not isinstance(result, Halt)
        rule, config = result
        rules.append(rule)
        configs.append(config)
    logger.debug("%s on %d symbol(s): %s after %d step(s)", machine.name, len(w), outcome.value, len(rules))
    return MachineRun(outcome, tuple(configs), tuple(rules))
