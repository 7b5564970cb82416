"""k-bounded reaction automata as finite automata.

States are configurations of weight at most k, tagged with the phase of the
process: feeding states still accept input symbols, draining states only take
lambda-moves (reactions run without input once the word is exhausted).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..core.errors import NfaConstructionError
from ..engine.multiset import Multiset, Symbol
from ..engine.reactions import DEFAULT_ENUMERATION_LIMIT, ReactionAutomaton

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class NfaState:
    config: Multiset
    draining: bool = False

    def __str__(self) -> str:
        return f"{self.config}{' (λ)' if self.draining else ''}"


Edge = Tuple[NfaState, Optional[Symbol]]


@dataclass(slots=True)
class NFA:
    alphabet: FrozenSet[Symbol]
    initial: NfaState
    states: Set[NfaState] = field(default_factory=set)
    transitions: Dict[Edge, Set[NfaState]] = field(default_factory=dict)
    finals: Set[NfaState] = field(default_factory=set)
    bound: int = 0

    def add(self, source: NfaState, symbol: Optional[Symbol], target: NfaState) -> None:
        self.transitions.setdefault((source, symbol), set()).add(target)

    def targets(self, source: NfaState, symbol: Optional[Symbol]) -> Set[NfaState]:
        return self.transitions.get((source, symbol), set())

    def edges(self) -> List[Tuple[NfaState, Optional[Symbol], NfaState]]:
        return [(s, a, t) for (s, a), targets in self.transitions.items() for t in targets]


def to_nfa(
    automaton: ReactionAutomaton, k: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> NFA:
    """Finite automaton for the weight-k fragment of the automaton's processes.

    Only states reachable from D_0 are built. Steps whose fed configuration
    a + D or whose result is heavier than k are dropped.
    """
    if automaton.initial.weight > k:
        raise NfaConstructionError(
            f"bound {k} is below the initial weight {automaton.initial.weight}"
        )
    start = NfaState(automaton.initial)
    nfa = NFA(frozenset(automaton.input_alphabet), start, bound=k)
    results: Dict[Multiset, List[Multiset]] = {}

    def res(d: Multiset) -> List[Multiset]:
        if d not in results:
            results[d] = automaton.results(d, limit)
        return results[d]

    frontier: Deque[NfaState] = deque([start])
    nfa.states.add(start)

    def visit(source: NfaState, symbol: Optional[Symbol], target: NfaState) -> None:
        nfa.add(source, symbol, target)
        if target not in nfa.states:
            nfa.states.add(target)
            frontier.append(target)

    while frontier:
        state = frontier.popleft()
        d = state.config
        if automaton.final in d and res(d) == [d]:
            nfa.finals.add(state)
        if not state.draining:
            for a in sorted(automaton.input_alphabet):
                fed = d.with_symbol(a)
                if fed.weight > k:
                    continue
                for nxt in res(fed):
                    if nxt.weight <= k:
                        visit(state, a, NfaState(nxt))
        for nxt in res(d):
            if nxt.weight <= k:
                visit(state, None, NfaState(nxt, draining=True))
    logger.debug("NFA with %d states for k=%d", len(nfa.states), k)
    return nfa


def closure(nfa: NFA, states: Iterable[NfaState]) -> Set[NfaState]:
    seen = set(states)
    stack = list(seen)
    while stack:
        s = stack.pop()
        for t in nfa.targets(s, None):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def nfa_accepts(nfa: NFA, w: Sequence[Symbol]) -> bool:
    current = closure(nfa, [nfa.initial])
    for a in w:
        step = set()
        for s in current:
            step |= nfa.targets(s, a)
        if not step:
            return False
        current = closure(nfa, step)
    return any(s in nfa.finals for s in current)
