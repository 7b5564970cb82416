"""Compile a restricted two-stack machine into a reaction automaton.

A machine configuration (p, alpha, beta) about to apply rule r is represented
by the multiset p . stm(alpha) . stm(beta) . r. Every step flips the hat
decoration of the state and stack symbols: the rule reaction rewrites the
state and the stack tops, and the doubling reactions shift every deeper
symbol by |x| (or |y|) positions by multiplying its count by 2**|x|. A wrong
guess leaves an odd top symbol behind next to hatted ones, which inhibits
everything afterwards.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from ..core.errors import CompilationError
from ..engine.multiset import Multiset, Symbol, hat_word, stm, unstm
from ..engine.reactions import Reaction, ReactionAutomaton
from .stackmachine import MachineRule, StackMachine, validate_restricted

logger = logging.getLogger(__name__)

FINAL_MARKER = "f'"

EntityKey = Tuple[str, str]


class Category(Enum):
    """Reaction families of the construction; `^` marks the hat-side family."""

    INITIAL = "A_0"
    INPUT = "A_a"
    INPUT_HAT = "A_a^"
    LAMBDA = "A_lambda"
    LAMBDA_HAT = "A_lambda^"
    DOUBLE_X = "A_X"
    DOUBLE_X_HAT = "A_X^"
    DOUBLE_Y = "A_Y"
    DOUBLE_Y_HAT = "A_Y^"
    FINAL = "A_f"
    FINAL_HAT = "A_f^"


@dataclass(slots=True)
class CompilationOutput:
    automaton: ReactionAutomaton
    machine: StackMachine
    symbol_table: Dict[EntityKey, Symbol]
    category_index: Dict[str, Category]
    deterministic: bool = False
    _reverse: Dict[Symbol, EntityKey] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._reverse = {symbol: key for key, symbol in self.symbol_table.items()}

    def entity(self, symbol: Symbol) -> Optional[EntityKey]:
        """The machine entity a (plain or hatted) symbol stands for."""
        return self._reverse.get(symbol.plain())

    def reactions_in(self, category: Category) -> List[Reaction]:
        return [r for r in self.automaton.reactions if self.category_index[r.label] is category]

    def side_table(self) -> str:
        return "".join(f"{label}\t{category.value}\n" for label, category in self.category_index.items())


class _Namer:
    """Assigns background symbols to machine entities without collisions."""

    def __init__(self, reserved: Iterable[str]) -> None:
        self.taken = set(reserved)
        self.table: Dict[EntityKey, Symbol] = {}

    def assign(self, kind: str, name: str) -> Symbol:
        key = (kind, name)
        if key in self.table:
            return self.table[key]
        candidate, suffix = name, 0
        while candidate in self.taken:
            suffix += 1
            candidate = f"{name}_{suffix}"
        if suffix:
            logger.debug("renamed %s %s to %s", kind, name, candidate)
        self.taken.add(candidate)
        symbol = Symbol(candidate)
        self.table[key] = symbol
        return symbol


class _Builder:
    def __init__(self, machine: StackMachine, deterministic: bool) -> None:
        self.machine = machine
        self.deterministic = deterministic
        namer = _Namer(s.name for s in machine.input_alphabet)
        for s in sorted(machine.input_alphabet):
            namer.table[("input", s.name)] = s
        self.states = {q: namer.assign("state", q) for q in sorted(machine.states)}
        self.stack = [
            {x: namer.assign(f"stack{i + 1}", x.name) for x in sorted(alphabet)}
            for i, alphabet in enumerate(machine.stack_alphabets)
        ]
        self.labels = {label: namer.assign("label", label) for label in machine.labels}
        self.final_marker = namer.assign("final", FINAL_MARKER)
        self.symbol_table = namer.table
        self.reactions: List[Reaction] = []
        self.categories: Dict[str, Category] = {}

        self.sigma = frozenset(machine.input_alphabet)
        self.gamma = frozenset(s for table in self.stack for s in table.values())
        self.gamma_hat = frozenset(s.hatted() for s in self.gamma)
        self.q = frozenset(self.states.values())
        self.q_hat = frozenset(s.hatted() for s in self.q)
        self.lab = frozenset(self.labels.values())
        self.lab_hat = frozenset(s.hatted() for s in self.lab)

    def add(self, label: str, category: Category, reactant: Multiset, inhibitor: Iterable[Symbol], product: Multiset) -> None:
        self.reactions.append(Reaction(label, reactant, frozenset(inhibitor), product))
        self.categories[label] = category

    def encode(self, x: Tuple[Symbol, ...], stack: int, hat: bool) -> Multiset:
        symbols = tuple(self.stack[stack][s] for s in x)
        return stm(hat_word(symbols) if hat else symbols)

    def rule_product(self, rule: MachineRule, follower: Symbol, hat: bool) -> Multiset:
        """q . stm(x) . stm(y) . r', all in the decoration of the next configuration."""
        state = self.states[rule.target]
        head = Multiset.of(state.hatted() if hat else state, follower)
        return head.sum(self.encode(rule.replacements[0], 0, hat)).sum(
            self.encode(rule.replacements[1], 1, hat)
        )

    def rule_reactant(self, rule: MachineRule, hat: bool, with_label: bool) -> Multiset:
        state = self.states[rule.state]
        x, y = (self.stack[0][rule.tops[0]], self.stack[1][rule.tops[1]])
        symbols = [state, x, y]
        if hat:
            symbols = [s.hatted() for s in symbols]
        if rule.symbol is not None:
            symbols.append(rule.symbol)
        if with_label:
            label = self.labels[rule.label]
            # Deterministic variant: hat-side configurations carry hatted labels.
            symbols.append(label.hatted() if hat and self.deterministic else label)
        return Multiset.of(*symbols)

    def followers(self, hat_product: bool) -> Iterable[Tuple[str, Symbol, Optional[Symbol]]]:
        """(label, symbol carried in the product, extra inhibitor) for every r'."""
        for name, symbol in self.labels.items():
            if not self.deterministic:
                yield name, symbol, None
            elif hat_product:
                yield name, symbol.hatted(), symbol.hatted()
            else:
                yield name, symbol, symbol

    def build(self) -> None:
        m = self.machine
        input_rules = [r for r in m.rules if not r.is_lambda]
        lambda_rules = [r for r in m.rules if r.is_lambda]
        bottoms = m.bottoms

        for rule in input_rules:
            if rule.state == m.initial_state and rule.tops == bottoms:
                for follower, carried, extra in self.followers(hat_product=True):
                    inhibitor = set(self.lab) | ({extra} if extra else set())
                    self.add(
                        f"A0/{rule.label}/{follower}",
                        Category.INITIAL,
                        self.rule_reactant(rule, hat=False, with_label=False),
                        inhibitor,
                        self.rule_product(rule, carried, hat=True),
                    )
        self._rule_family(input_rules, "Aa", Category.INPUT, Category.INPUT_HAT, frozenset())
        self._rule_family(lambda_rules, "Al", Category.LAMBDA, Category.LAMBDA_HAT, self.sigma)
        self._doubling(0, "AX", Category.DOUBLE_X, Category.DOUBLE_X_HAT)
        self._doubling(1, "AY", Category.DOUBLE_Y, Category.DOUBLE_Y_HAT)

        final = self.states[m.final_state]
        self.add("Af", Category.FINAL, Multiset.of(final), self.gamma_hat, Multiset.of(self.final_marker))
        self.add("Af^", Category.FINAL_HAT, Multiset.of(final.hatted()), self.gamma, Multiset.of(self.final_marker))

    def _rule_family(
        self,
        rules: List[MachineRule],
        prefix: str,
        plain_category: Category,
        hat_category: Category,
        extra_inhibitor: frozenset[Symbol],
    ) -> None:
        for rule in rules:
            for follower, carried, extra in self.followers(hat_product=True):
                inhibitor = set(extra_inhibitor | self.gamma_hat) | ({extra} if extra else set())
                self.add(
                    f"{prefix}/{rule.label}/{follower}",
                    plain_category,
                    self.rule_reactant(rule, hat=False, with_label=True),
                    inhibitor,
                    self.rule_product(rule, carried, hat=True),
                )
        for rule in rules:
            for follower, carried, extra in self.followers(hat_product=False):
                inhibitor = set(extra_inhibitor | self.gamma) | ({extra} if extra else set())
                self.add(
                    f"{prefix}^/{rule.label}/{follower}",
                    hat_category,
                    self.rule_reactant(rule, hat=True, with_label=True),
                    inhibitor,
                    self.rule_product(rule, carried, hat=False),
                )

    def _doubling(self, stack: int, prefix: str, plain_category: Category, hat_category: Category) -> None:
        rules = self.machine.rules
        for hat in (False, True):
            category = hat_category if hat else plain_category
            for original, symbol in self.stack[stack].items():
                for rule in rules:
                    label = self.labels[rule.label]
                    shift = 1 << len(rule.replacements[stack])
                    if hat:
                        labels = self.lab_hat if self.deterministic else self.lab
                        own = label.hatted() if self.deterministic else label
                        inhibitor = self.q | self.gamma | (labels - {own}) | {self.final_marker}
                        reactant = Multiset({symbol.hatted(): 2})
                        product = Multiset({symbol: shift})
                    else:
                        inhibitor = self.q_hat | self.gamma_hat | (self.lab - {label}) | {self.final_marker}
                        reactant = Multiset({symbol: 2})
                        product = Multiset({symbol.hatted(): shift})
                    self.add(
                        f"{prefix}{'^' if hat else ''}/{original}/{rule.label}",
                        category,
                        reactant,
                        inhibitor,
                        product,
                    )

    def background(self) -> frozenset[Symbol]:
        extra = self.lab_hat if self.deterministic else frozenset()
        return (
            self.q | self.q_hat | self.sigma | self.gamma | self.gamma_hat | self.lab
            | {self.final_marker} | extra
        )


def _compile(machine: StackMachine, deterministic: bool) -> CompilationOutput:
    if machine.k != 2:
        raise CompilationError(f"only two-stack machines can be compiled (got {machine.k} stacks)")
    problems = validate_restricted(machine)
    if problems:
        details = "; ".join(str(p) for p in problems)
        raise CompilationError(f"machine {machine.name} is not a restricted machine: {details}")
    builder = _Builder(machine, deterministic)
    builder.build()
    initial = Multiset.of(
        builder.states[machine.initial_state],
        builder.stack[0][machine.bottoms[0]],
        builder.stack[1][machine.bottoms[1]],
    )
    suffix = "-det" if deterministic else ""
    automaton = ReactionAutomaton(
        background=builder.background(),
        input_alphabet=builder.sigma,
        reactions=tuple(builder.reactions),
        initial=initial,
        final=builder.final_marker,
        name=f"{machine.name or 'machine'}{suffix}",
    )
    logger.info(
        "compiled %s into %d reactions over %d symbols",
        machine.name or "machine",
        len(automaton.reactions),
        len(automaton.background),
    )
    logger.warning("compiled automata need workspace exponential in the stack height (stm encoding)")
    return CompilationOutput(
        automaton=automaton,
        machine=machine,
        symbol_table=dict(builder.symbol_table),
        category_index=dict(builder.categories),
        deterministic=deterministic,
    )


def compile_machine(machine: StackMachine) -> CompilationOutput:
    return _compile(machine, deterministic=False)


def compile_deterministic(machine: StackMachine) -> CompilationOutput:
    return _compile(machine, deterministic=True)


def looks_compiled(automaton: ReactionAutomaton) -> bool:
    """Heuristic for `.ra` files produced by this compiler: an f' final marker and hatted symbols."""
    return automaton.final.name.startswith(FINAL_MARKER) and any(s.hat for s in automaton.background)


class ViewKind(Enum):
    """How a compiled-automaton configuration reads back as a machine configuration."""

    MACHINE = "machine"
    ACCEPTING = "accepting"
    TRAP = "trap"


@dataclass(frozen=True, slots=True)
class ConfigView:
    kind: ViewKind
    state: Optional[str] = None
    stacks: Tuple[Tuple[Symbol, ...], ...] = ()
    label: Optional[str] = None
    parity: Optional[str] = None
    pending_input: Tuple[Symbol, ...] = ()
    reason: str = ""

    def __str__(self) -> str:
        if self.kind is ViewKind.ACCEPTING:
            return "accepting residue (f' present)"
        if self.kind is ViewKind.TRAP:
            return f"trap: {self.reason}"
        stacks = " | ".join(" ".join(str(s) for s in stack) or "λ" for stack in self.stacks)
        label = self.label or "-"
        pending = " ".join(str(s) for s in self.pending_input)
        tail = f" input:{pending}" if pending else ""
        return f"{self.parity}: state {self.state}, stacks {stacks}, next {label}{tail}"


def explain_config(out: CompilationOutput, d: Multiset) -> ConfigView:
    """Read a compiled-automaton configuration back as a machine configuration."""
    if out.automaton.final in d:
        return ConfigView(ViewKind.ACCEPTING)

    def trap(reason: str) -> ConfigView:
        return ConfigView(ViewKind.TRAP, reason=reason)

    decorations = set()
    states: List[Tuple[str, int]] = []
    labels: List[Tuple[str, Symbol, int]] = []
    stacks: List[Dict[Symbol, int]] = [{}, {}]
    pending: List[Symbol] = []
    for symbol, count in d.sorted_items():
        key = out.entity(symbol)
        if key is None:
            return trap(f"unknown symbol {symbol}")
        kind, name = key
        if kind == "input":
            pending.extend([symbol] * count)
        elif kind == "state":
            decorations.add(symbol.hat)
            states.append((name, count))
        elif kind in ("stack1", "stack2"):
            decorations.add(symbol.hat)
            original = Symbol(name)
            stacks[0 if kind == "stack1" else 1][original] = count
        elif kind == "label":
            labels.append((name, symbol, count))
    if len(decorations) > 1:
        return trap("both plain and hatted symbols present")
    if len(states) != 1 or states[0][1] != 1:
        return trap("no single state symbol")
    if len(labels) > 1 or any(count != 1 for _, _, count in labels):
        return trap("more than one pending label")
    hat = decorations.pop()
    if out.deterministic and labels and labels[0][1].hat != hat:
        return trap("label decoration does not match the configuration")
    decoded = []
    for index, counts in enumerate(stacks):
        word = unstm(counts)
        if word is None:
            return trap(f"stack{index + 1} is not an stm encoding")
        if not word:
            return trap(f"stack{index + 1} is empty")
        decoded.append(word)
    return ConfigView(
        ViewKind.MACHINE,
        state=states[0][0],
        stacks=tuple(decoded),
        label=labels[0][0] if labels else None,
        parity="odd" if hat else "even",
        pending_input=tuple(pending),
    )
