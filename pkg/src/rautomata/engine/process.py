"""Interactive processes: feeding input, convergence and bounded acceptance search."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Deque, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt

from ..core.contracts import Outcome
from ..core.diagnostics import Diagnostic
from ..core.errors import BudgetExceededError, InputSymbolError
from .multiset import Multiset, Symbol
from .reactions import ReactionAutomaton, ReactionBag, Transition

logger = logging.getLogger(__name__)

Word = Tuple[Symbol, ...]


class SearchBudget(BaseModel):
    """Explicit bounds for the acceptance search; hitting any of them yields Undecided."""

    model_config = ConfigDict(frozen=True)

    max_weight: PositiveInt = 10_000
    max_steps: PositiveInt = 10_000
    max_states: PositiveInt = 1_000_000
    enumeration_limit: PositiveInt = 100_000
    # Also prune when a + D_i (the configuration right after feeding) is too heavy.
    bound_fed: bool = False


@dataclass(frozen=True, slots=True)
class ProcessState:
    consumed: int
    config: Multiset


@dataclass(frozen=True, slots=True)
class TraceStep:
    symbol: Optional[Symbol]
    bag: Optional[ReactionBag]
    config: Multiset


@dataclass(frozen=True, slots=True)
class Trace:
    initial: Multiset
    steps: Tuple[TraceStep, ...] = ()

    @property
    def configs(self) -> List[Multiset]:
        return [self.initial] + [step.config for step in self.steps]

    @property
    def fed(self) -> Word:
        return tuple(step.symbol for step in self.steps if step.symbol is not None)

    @property
    def last(self) -> Multiset:
        return self.steps[-1].config if self.steps else self.initial

    def fed_configs(self) -> List[Multiset]:
        """Configurations right after each input symbol was added (a + D_i)."""
        out = []
        previous = self.initial
        for step in self.steps:
            if step.symbol is not None:
                out.append(previous.with_symbol(step.symbol))
            previous = step.config
        return out

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True, slots=True)
class Verdict:
    outcome: Outcome
    witness: Optional[Trace] = None
    reason: Optional[str] = None
    explored: int = 0

    @property
    def accepted(self) -> bool:
        return self.outcome is Outcome.ACCEPTED

    @staticmethod
    def accept(witness: Trace, explored: int = 0) -> "Verdict":
        return Verdict(Outcome.ACCEPTED, witness=witness, explored=explored)

    @staticmethod
    def reject(explored: int = 0) -> "Verdict":
        return Verdict(Outcome.REJECTED, explored=explored)

    @staticmethod
    def undecided(reason: str, explored: int = 0) -> "Verdict":
        return Verdict(Outcome.UNDECIDED, reason=reason, explored=explored)


@dataclass(frozen=True, slots=True)
class Move:
    """An edge of the process tree."""

    symbol: Optional[Symbol]
    bag: Optional[ReactionBag]
    target: ProcessState


def check_word(automaton: ReactionAutomaton, w: Sequence[Symbol]) -> Word:
    word = tuple(w)
    for position, s in enumerate(word, start=1):
        if s not in automaton.input_alphabet:
            raise InputSymbolError(f"symbol {s} at position {position} is not an input symbol")
    return word


def _moves(s: ProcessState, w: Word, steps: List[Transition]) -> List[Move]:
    if s.consumed < len(w):
        symbol: Optional[Symbol] = w[s.consumed]
        base = s.config.with_symbol(w[s.consumed])
        consumed = s.consumed + 1
    else:
        symbol, base, consumed = None, s.config, s.consumed
    if not steps:
        return [Move(symbol, None, ProcessState(consumed, base))]
    return [Move(symbol, t.bag, ProcessState(consumed, t.result)) for t in steps]


def step_base(s: ProcessState, w: Word) -> Multiset:
    """The multiset reactions act on from s: a_{i+1} + D_i while feeding, D_i afterwards."""
    if s.consumed < len(w):
        return s.config.with_symbol(w[s.consumed])
    return s.config


def successors(
    automaton: ReactionAutomaton, s: ProcessState, w: Sequence[Symbol], limit: int = 100_000
) -> List[ProcessState]:
    word = tuple(w)
    moves = _moves(s, word, automaton.transitions(step_base(s, word), limit))
    unique = {m.target for m in moves}
    return sorted(unique, key=lambda st: (st.consumed, st.config.sort_key()))


def converged(
    automaton: ReactionAutomaton, s: ProcessState, w: Sequence[Symbol], limit: int = 100_000
) -> bool:
    return s.consumed == len(w) and not automaton.enumerate_enp(s.config, limit)


@dataclass(slots=True)
class ProcessGraph:
    """Bounded exploration result: states, labeled moves and terminal flags."""

    word: Word
    root: ProcessState
    moves: Dict[ProcessState, List[Move]] = field(default_factory=dict)
    accepting: set[ProcessState] = field(default_factory=set)
    dead_ends: set[ProcessState] = field(default_factory=set)
    truncated: Optional[str] = None

    @property
    def states(self) -> List[ProcessState]:
        return list(self.moves)


class _Search:
    """Breadth-first search over process states, deduplicated on (consumed, config)."""

    def __init__(self, automaton: ReactionAutomaton, w: Word, budget: SearchBudget) -> None:
        self.automaton = automaton
        self.w = w
        self.budget = budget
        self.root = ProcessState(0, automaton.initial)
        self.parents: Dict[ProcessState, Optional[Tuple[ProcessState, Move]]] = {}
        self.depth: Dict[ProcessState, int] = {}
        self.pruned: Optional[str] = None
        self._memo: Dict[Multiset, List[Transition]] = {}

    def _prune(self, reason: str) -> None:
        if self.pruned is None:
            logger.info("search pruned by %s", reason)
            self.pruned = reason

    def _transitions(self, base: Multiset) -> List[Transition]:
        cached = self._memo.get(base)
        if cached is None:
            cached = self.automaton.transitions(base, self.budget.enumeration_limit)
            self._memo[base] = cached
        return cached

    def expand(self, s: ProcessState) -> Optional[List[Move]]:
        """Moves out of s; None when s is converged."""
        base = step_base(s, self.w)
        if self.budget.bound_fed and base.weight > self.budget.max_weight:
            self._prune("max_weight")
            return []
        try:
            steps = self._transitions(base)
        except BudgetExceededError:
            self._prune("enumeration limit")
            return []
        if s.consumed == len(self.w) and not steps:
            return None
        return _moves(s, self.w, steps)

    def admit(self, parent: ProcessState, move: Move) -> bool:
        target = move.target
        if target in self.parents:
            return False
        if target.config.weight > self.budget.max_weight:
            self._prune("max_weight")
            return False
        if self.depth[parent] + 1 > self.budget.max_steps:
            self._prune("max_steps")
            return False
        if len(self.parents) >= self.budget.max_states:
            self._prune("max_states")
            return False
        self.parents[target] = (parent, move)
        self.depth[target] = self.depth[parent] + 1
        return True

    def start(self) -> bool:
        if self.root.config.weight > self.budget.max_weight:
            self._prune("max_weight")
            return False
        self.parents[self.root] = None
        self.depth[self.root] = 0
        return True

    def witness(self, s: ProcessState) -> Trace:
        steps: List[TraceStep] = []
        link = self.parents[s]
        while link is not None:
            parent, move = link
            steps.append(TraceStep(move.symbol, move.bag, move.target.config))
            link = self.parents[parent]
        steps.reverse()
        return Trace(self.root.config, tuple(steps))


def accepts(
    automaton: ReactionAutomaton, w: Sequence[Symbol], budget: Optional[SearchBudget] = None
) -> Verdict:
    """Decide membership of w within the budget.

    Accepted carries a shortest witness. Rejected means the bounded reachable space
    was exhausted without any bound being hit; any pruning makes the answer Undecided.
    """
    word = check_word(automaton, w)
    budget = budget or SearchBudget()
    search = _Search(automaton, word, budget)
    if not search.start():
        return Verdict.undecided(search.pruned or "max_weight")
    frontier: Deque[ProcessState] = deque([search.root])
    while frontier:
        s = frontier.popleft()
        moves = search.expand(s)
        if moves is None:
            if automaton.final in s.config:
                logger.debug("accepted after %d state(s)", len(search.parents))
                return Verdict.accept(search.witness(s), len(search.parents))
            continue
        for move in moves:
            if search.admit(s, move):
                frontier.append(move.target)
    explored = len(search.parents)
    if search.pruned is not None:
        return Verdict.undecided(search.pruned, explored)
    logger.debug("rejected after %d state(s)", explored)
    return Verdict.reject(explored)


def explore(
    automaton: ReactionAutomaton, w: Sequence[Symbol], budget: Optional[SearchBudget] = None
) -> ProcessGraph:
    """Exhaustive bounded exploration of the process tree for w."""
    word = check_word(automaton, w)
    budget = budget or SearchBudget()
    search = _Search(automaton, word, budget)
    graph = ProcessGraph(word, search.root)
    if not search.start():
        graph.truncated = search.pruned
        return graph
    frontier: Deque[ProcessState] = deque([search.root])
    while frontier:
        s = frontier.popleft()
        moves = search.expand(s)
        if moves is None:
            graph.moves[s] = []
            if automaton.final in s.config:
                graph.accepting.add(s)
            else:
                graph.dead_ends.add(s)
            continue
        graph.moves[s] = moves
        for move in moves:
            if search.admit(s, move):
                frontier.append(move.target)
    graph.truncated = search.pruned
    return graph


def shortlex_words(alphabet: Sequence[Symbol], max_len: int) -> List[Word]:
    ordered = sorted(alphabet)
    words: List[Word] = []
    for length in range(max_len + 1):
        words.extend(product(ordered, repeat=length))
    return words


def enumerate_language(
    automaton: ReactionAutomaton, max_len: int, budget: Optional[SearchBudget] = None
) -> List[Tuple[Word, Verdict]]:
    """Verdicts for every word over the input alphabet up to max_len, in shortlex order."""
    return [
        (word, accepts(automaton, word, budget))
        for word in shortlex_words(tuple(automaton.input_alphabet), max_len)
    ]


def replay(
    automaton: ReactionAutomaton, w: Sequence[Symbol], trace: Trace, limit: int = 100_000
) -> List[Diagnostic]:
    """Re-check an accepting trace step by step; an empty list means it is valid."""
    word = tuple(w)
    problems: List[Diagnostic] = []
    if trace.initial != automaton.initial:
        problems.append(Diagnostic("bad-initial", "trace does not start at D0", str(trace.initial)))
    previous = trace.initial
    for index, step in enumerate(trace.steps):
        where = f"step {index + 1}"
        expected = word[index] if index < len(word) else None
        if step.symbol != expected:
            problems.append(
                Diagnostic("feeding-order", f"fed {step.symbol}, expected {expected}", where)
            )
            break
        base = previous.with_symbol(step.symbol) if step.symbol is not None else previous
        if step.bag is None:
            if automaton.enumerate_enp(base, limit) or step.config != base:
                problems.append(Diagnostic("bad-idle-step", "idle step on an active configuration", where))
        elif not automaton.enabled_maximally(step.bag, base):
            problems.append(Diagnostic("not-maximal", f"{step.bag} is not maximally enabled", where))
        elif automaton.apply(step.bag, base) != step.config:
            problems.append(Diagnostic("bad-result", f"{step.config} is not the result of {step.bag}", where))
        previous = step.config
    if len(trace.steps) < len(word):
        problems.append(Diagnostic("short-trace", "input not fully consumed", str(len(trace.steps))))
    elif automaton.enumerate_enp(trace.last, limit):
        problems.append(Diagnostic("not-converged", "last configuration is still active", str(trace.last)))
    if automaton.final not in trace.last:
        problems.append(Diagnostic("no-final", "final symbol missing at the end", str(trace.last)))
    return problems
