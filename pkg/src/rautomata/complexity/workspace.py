"""Workspace of accepting processes and empirical boundedness profiles."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.contracts import Outcome
from ..core.errors import AutomatonError
from ..engine.multiset import Symbol
from ..engine.process import SearchBudget, Trace, Word, accepts
from ..engine.reactions import ReactionAutomaton

logger = logging.getLogger(__name__)

CSV_HEADER = ("string", "length", "ws", "trace_id")


def format_word(word: Sequence[Symbol]) -> str:
    if all(len(s.name) == 1 and not s.hat for s in word):
        return "".join(str(s) for s in word)
    return " ".join(str(s) for s in word)


def workspace_of_trace(
    trace: Trace, automaton: Optional[ReactionAutomaton] = None, include_fed: bool = False
) -> int:
    """Largest configuration weight along the trace, D_0 included.

    With include_fed the configurations a + D_i right after feeding count too.
    Passing the automaton checks that the trace ends with the final symbol.
    """
    if automaton is not None and automaton.final not in trace.last:
        raise AutomatonError("workspace is only defined for accepting traces")
    weights = [config.weight for config in trace.configs]
    if include_fed:
        weights.extend(config.weight for config in trace.fed_configs())
    return max(weights)


def _search_workspace(
    automaton: ReactionAutomaton, w: Sequence[Symbol], cap: int, budget: SearchBudget
) -> Tuple[Optional[int], Optional[Trace]]:
    low = automaton.initial.weight
    if low > cap:
        return None, None

    def attempt(bound: int) -> Tuple[Outcome, Optional[Trace], Optional[str]]:
        verdict = accepts(automaton, w, budget.model_copy(update={"max_weight": bound}))
        return verdict.outcome, verdict.witness, verdict.reason

    # Gallop upwards until some bound accepts; acceptance is monotone in the bound.
    failed = low - 1
    bound = low
    best: Optional[Tuple[int, Trace]] = None
    while best is None:
        outcome, witness, reason = attempt(bound)
        if outcome is Outcome.ACCEPTED and witness is not None:
            best = (workspace_of_trace(witness), witness)
            break
        if outcome is Outcome.REJECTED or reason != "max_weight" or bound >= cap:
            logger.debug("no workspace within %d for %s (%s)", cap, format_word(w), reason or "rejected")
            return None, None
        failed = bound
        bound = min(bound * 2, cap)

    high, trace = best
    while failed + 1 < high:
        middle = (failed + 1 + high) // 2
        outcome, witness, _ = attempt(middle)
        if outcome is Outcome.ACCEPTED and witness is not None:
            high, trace = min(middle, workspace_of_trace(witness)), witness
        else:
            failed = middle
    return high, trace


def workspace(
    automaton: ReactionAutomaton,
    w: Sequence[Symbol],
    cap: int,
    budget: Optional[SearchBudget] = None,
) -> Optional[int]:
    """Smallest weight bound B <= cap under which w is accepted, or None."""
    ws, _ = _search_workspace(automaton, w, cap, budget or SearchBudget())
    return ws


@dataclass(frozen=True, slots=True)
class WorkspaceRecord:
    word: Word
    length: int
    ws: Optional[int]
    trace_id: Optional[str] = None
    witness: Optional[Trace] = None

    @property
    def text(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True, slots=True)
class WorkspaceReport:
    """Per-string workspace plus advisory growth figures; never a proof of a bound."""

    records: Tuple[WorkspaceRecord, ...]
    max_ratio: Optional[float]
    monotone: bool
    growth_hint: str

    @property
    def accepted(self) -> List[WorkspaceRecord]:
        return [r for r in self.records if r.ws is not None]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.records:
            writer.writerow([r.text, r.length, "" if r.ws is None else r.ws, r.trace_id or ""])
        return buffer.getvalue()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "records": [
                {"string": r.text, "length": r.length, "ws": r.ws, "trace_id": r.trace_id}
                for r in self.records
            ],
            "max_ratio": self.max_ratio,
            "monotone": self.monotone,
            "growth_hint": self.growth_hint,
        }


def _summarize(records: Sequence[WorkspaceRecord]) -> Tuple[Optional[float], bool, str]:
    points = sorted((r.length, r.ws) for r in records if r.ws is not None)
    if not points:
        return None, True, "no accepted strings"
    ratios = [ws / n for n, ws in points if n > 0]
    max_ratio = max(ratios) if ratios else None
    monotone = all(a[1] <= b[1] for a, b in zip(points, points[1:]))
    values = {ws for _, ws in points}
    if len(values) == 1:
        hint = "constant"
    elif ratios and ratios[-1] <= ratios[0]:
        hint = "linear"
    else:
        growth = [b[1] / a[1] for a, b in zip(points, points[1:]) if b[0] > a[0] and a[1]]
        hint = "exponential" if len(growth) >= 2 and min(growth) >= 2 else "superlinear"
    return max_ratio, monotone, hint


def profile_boundedness(
    automaton: ReactionAutomaton,
    strings: Sequence[Sequence[Symbol]],
    cap: int,
    budget: Optional[SearchBudget] = None,
) -> WorkspaceReport:
    budget = budget or SearchBudget()
    records = []
    for index, w in enumerate(strings, start=1):
        ws, trace = _search_workspace(automaton, w, cap, budget)
        trace_id = f"t{index}" if trace is not None else None
        records.append(WorkspaceRecord(tuple(w), len(w), ws, trace_id, trace))
        logger.debug("WS(%s) = %s", format_word(w), ws)
    max_ratio, monotone, hint = _summarize(records)
    return WorkspaceReport(tuple(records), max_ratio, monotone, hint)
