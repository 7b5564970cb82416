"""Reactions, reaction bags and reaction automata.

A reaction bag is enabled by a configuration T when its aggregate reactant fits
inside T and none of its inhibitors occur in T. The maximally parallel bags are
the enabled bags no single extra reaction instance can join; each one yields a
successor configuration T - R + P.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from ..core.diagnostics import Diagnostic
from ..core.errors import BudgetExceededError, InvalidAutomatonError, UnknownReactionError
from .multiset import EMPTY_TOKEN, Multiset, Symbol, format_multiset

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 100_000


@dataclass(frozen=True, slots=True)
class Reaction:
    label: str
    reactant: Multiset
    inhibitor: frozenset[Symbol]
    product: Multiset

    def fits(self, t: Multiset) -> bool:
        """Whether a single instance of this reaction is enabled by t."""
        return self.reactant.included_in(t) and not any(s in t for s in self.inhibitor)

    def symbols(self) -> frozenset[Symbol]:
        return self.reactant.support | self.inhibitor | self.product.support

    def __str__(self) -> str:
        inhibitor = " ".join(str(s) for s in sorted(self.inhibitor)) or EMPTY_TOKEN
        return f"{self.label}: {self.reactant} | {inhibitor} | {self.product}"


@dataclass(frozen=True, slots=True, order=True)
class ReactionBag:
    """A multiset of reactions, stored as (label, count) pairs sorted by label."""

    counts: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[str, int] | Iterable[Tuple[str, int]]) -> "ReactionBag":
        items = counts.items() if isinstance(counts, Mapping) else counts
        merged: Dict[str, int] = {}
        for label, count in items:
            if count < 0:
                raise ValueError(f"negative count {count} for reaction {label}")
            if count:
                merged[label] = merged.get(label, 0) + count
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def of(cls, *labels: str) -> "ReactionBag":
        return cls.from_counts((label, 1) for label in labels)

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __bool__(self) -> bool:
        return bool(self.counts)

    def get(self, label: str) -> int:
        for name, count in self.counts:
            if name == label:
                return count
        return 0

    @property
    def weight(self) -> int:
        return sum(count for _, count in self.counts)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(label for label, _ in self.counts)

    def extended(self, label: str, count: int = 1) -> "ReactionBag":
        return ReactionBag.from_counts(list(self.counts) + [(label, count)])

    def included_in(self, other: "ReactionBag") -> bool:
        return all(other.get(label) >= count for label, count in self.counts)

    def __str__(self) -> str:
        if not self.counts:
            return EMPTY_TOKEN
        return " ".join(f"{label}^{n}" if n > 1 else label for label, n in self.counts)


@dataclass(frozen=True, slots=True)
class Transition:
    """One maximally parallel step: the applied bag and the configuration it yields."""

    bag: ReactionBag
    result: Multiset


@dataclass(frozen=True, slots=True)
class ReactionAutomaton:
    background: frozenset[Symbol]
    input_alphabet: frozenset[Symbol]
    reactions: Tuple[Reaction, ...]
    initial: Multiset
    final: Symbol
    name: str = ""
    _index: Dict[str, Reaction] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {r.label: r for r in self.reactions})

    # -- lookup ----------------------------------------------------------

    def reaction(self, label: str) -> Reaction:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownReactionError(f"unknown reaction label: {label}") from None

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(r.label for r in self.reactions)

    def aggregate_reactant(self, bag: ReactionBag) -> Multiset:
        total = Multiset()
        for label, count in bag:
            total = total.sum(self.reaction(label).reactant.scale(count))
        return total

    def aggregate_inhibitor(self, bag: ReactionBag) -> frozenset[Symbol]:
        inhibitor: frozenset[Symbol] = frozenset()
        for label, _ in bag:
            inhibitor |= self.reaction(label).inhibitor
        return inhibitor

    def aggregate_product(self, bag: ReactionBag) -> Multiset:
        total = Multiset()
        for label, count in bag:
            total = total.sum(self.reaction(label).product.scale(count))
        return total

    def apply(self, bag: ReactionBag, t: Multiset) -> Multiset:
        """T - R_bag + P_bag; raises CountUnderflowError if the reactant does not fit."""
        return t.subtract(self.aggregate_reactant(bag)).sum(self.aggregate_product(bag))

    # -- enabledness -----------------------------------------------------

    def enabled(self, bag: ReactionBag, t: Multiset) -> bool:
        reactant = self.aggregate_reactant(bag)
        inhibitor = self.aggregate_inhibitor(bag)
        return reactant.included_in(t) and not any(s in t for s in inhibitor)

    def enabled_maximally(self, bag: ReactionBag, t: Multiset) -> bool:
        if not self.enabled(bag, t):
            return False
        return not any(self.enabled(bag.extended(r.label), t) for r in self.reactions)

    def candidates(self, t: Multiset) -> List[Reaction]:
        """Reactions individually enabled by t, in label order."""
        return sorted((r for r in self.reactions if r.fits(t)), key=lambda r: r.label)

    def enumerate_enp(
        self, t: Multiset, limit: int = DEFAULT_ENUMERATION_LIMIT
    ) -> List[ReactionBag]:
        """All reaction bags enabled by t in maximally parallel manner, canonically sorted.

        Only individually enabled reactions can take part in an enabled bag, and
        once they are chosen the inhibitors no longer matter: a bag is maximal when
        what it leaves over contains no candidate's reactant. The search walks the
        candidates in label order, tries counts high to low and skips counts that
        would leave room for the current reaction whatever the later ones take.
        """
        candidates = self.candidates(t)
        if not candidates:
            return []
        for r in candidates:
            if r.reactant.is_empty():
                raise InvalidAutomatonError(
                    "cannot enumerate maximal bags",
                    [Diagnostic("empty-reactant", "empty reactant", r.label)],
                )
        search = _BagSearch(candidates, t, limit)
        bags = search.run()
        logger.debug("En^p(%s): %d bag(s), %d node(s)", t, len(bags), search.nodes)
        return sorted(bags)

    def transitions(
        self, t: Multiset, limit: int = DEFAULT_ENUMERATION_LIMIT
    ) -> List[Transition]:
        out = []
        for bag in self.enumerate_enp(t, limit):
            out.append(Transition(bag, self.apply(bag, t)))
        return out

    def results(self, t: Multiset, limit: int = DEFAULT_ENUMERATION_LIMIT) -> List[Multiset]:
        """Res_A(t); a configuration nothing applies to is its own (only) result."""
        steps = self.transitions(t, limit)
        if not steps:
            return [t]
        unique = {step.result for step in steps}
        return sorted(unique, key=Multiset.sort_key)

    # -- static checks ---------------------------------------------------

    def is_deterministic(self) -> bool:
        seen: Dict[Tuple[Multiset, frozenset[Symbol]], str] = {}
        for r in self.reactions:
            key = (r.reactant, r.inhibitor)
            if key in seen:
                logger.debug("reactions %s and %s share reactant and inhibitor", seen[key], r.label)
                return False
            seen[key] = r.label
        return True

    def validate(self) -> List[Diagnostic]:
        problems: List[Diagnostic] = []
        background = self.background
        for s in sorted(self.input_alphabet - background):
            problems.append(
                Diagnostic("input-outside-background", "input symbol not in background", str(s))
            )
        if self.final not in background:
            problems.append(
                Diagnostic("final-outside-background", "final symbol not in background", str(self.final))
            )
        for s in sorted(self.initial.support - background):
            problems.append(
                Diagnostic("initial-outside-background", "initial symbol not in background", str(s))
            )
        seen: set[str] = set()
        for r in self.reactions:
            if r.label in seen:
                problems.append(Diagnostic("duplicate-label", "duplicate reaction label", r.label))
            seen.add(r.label)
            if r.reactant.is_empty():
                problems.append(Diagnostic("empty-reactant", "empty reactant", r.label))
            clash = r.reactant.support & r.inhibitor
            if clash:
                names = " ".join(str(s) for s in sorted(clash))
                problems.append(
                    Diagnostic(
                        "reactant-intersects-inhibitor",
                        f"reactant intersects inhibitor ({names})",
                        r.label,
                    )
                )
            for s in sorted(r.symbols() - background):
                problems.append(
                    Diagnostic("symbol-outside-background", f"symbol {s} not in background", r.label)
                )
        return problems

    def validated(self) -> "ReactionAutomaton":
        problems = self.validate()
        if problems:
            raise InvalidAutomatonError(f"invalid reaction automaton {self.name}".rstrip(), problems)
        return self

    def describe(self) -> str:
        return (
            f"{self.name or 'automaton'}: |S|={len(self.background)} |Σ|={len(self.input_alphabet)} "
            f"|A|={len(self.reactions)} D0={format_multiset(self.initial)} f={self.final}"
        )


class _BagSearch:
    """Depth-first search over count vectors of the candidate reactions."""

    def __init__(self, candidates: Sequence[Reaction], t: Multiset, limit: int) -> None:
        self.reactants: List[List[Tuple[Symbol, int]]] = [
            r.reactant.sorted_items() for r in candidates
        ]
        self.labels = [r.label for r in candidates]
        self.remaining: Dict[Symbol, int] = t.counts()
        self.chosen: List[int] = [0] * len(candidates)
        self.limit = limit
        self.nodes = 0
        self.found: List[ReactionBag] = []

    def run(self) -> List[ReactionBag]:
        self._visit(0)
        return self.found

    def _cap(self, i: int) -> int:
        rem = self.remaining
        return min(rem.get(s, 0) // c for s, c in self.reactants[i])

    def _fits(self, i: int, pool: Mapping[Symbol, int]) -> bool:
        return all(pool.get(s, 0) >= c for s, c in self.reactants[i])

    def _later_use(self, start: int) -> Dict[Symbol, int]:
        # Upper bound on what reactions start.. can still consume.
        use: Dict[Symbol, int] = {}
        for j in range(start, len(self.reactants)):
            cap = self._cap(j)
            if cap:
                for s, c in self.reactants[j]:
                    use[s] = use.get(s, 0) + cap * c
        return use

    def _visit(self, i: int) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError("enumeration_limit", self.limit)
        rem = self.remaining
        if i == len(self.reactants):
            if not any(self._fits(j, rem) for j in range(len(self.reactants))):
                self.found.append(
                    ReactionBag.from_counts(zip(self.labels, self.chosen))
                )
            return

        # Whatever happens below, at least `floor` survives; an earlier reaction
        # fitting there can never be excluded again.
        use = self._later_use(i)
        floor = {s: n - use.get(s, 0) for s, n in rem.items()}
        if any(self._fits(j, floor) for j in range(i)):
            return

        later = self._later_use(i + 1)
        cap = self._cap(i)
        lowest = max(
            0, min((rem.get(s, 0) - later.get(s, 0)) // c for s, c in self.reactants[i])
        )
        for n in range(cap, lowest - 1, -1):
            self._take(i, n)
            try:
                self._visit(i + 1)
            finally:
                self._take(i, -n)

    def _take(self, i: int, n: int) -> None:
        if not n:
            return
        rem = self.remaining
        for s, c in self.reactants[i]:
            left = rem.get(s, 0) - n * c
            if left:
                rem[s] = left
            else:
                rem.pop(s, None)
        self.chosen[i] += n

