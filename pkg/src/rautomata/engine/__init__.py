"""Reaction automaton semantics: multisets, maximally parallel steps, processes."""

from .multiset import (
    EMPTY,
    MAX_COUNT,
    Multiset,
    Symbol,
    format_multiset,
    hat_word,
    parse_multiset,
    parse_symbols,
    stm,
    unstm,
)
from .process import (
    Move,
    ProcessGraph,
    ProcessState,
    SearchBudget,
    Trace,
    TraceStep,
    Verdict,
    Word,
    accepts,
    check_word,
    converged,
    enumerate_language,
    explore,
    replay,
    shortlex_words,
    successors,
)
from .reactions import Reaction, ReactionAutomaton, ReactionBag, Transition

__all__ = [
    "EMPTY",
    "MAX_COUNT",
    "Move",
    "Multiset",
    "ProcessGraph",
    "ProcessState",
    "Reaction",
    "ReactionAutomaton",
    "ReactionBag",
    "SearchBudget",
    "Symbol",
    "Trace",
    "TraceStep",
    "Transition",
    "Verdict",
    "Word",
    "accepts",
    "check_word",
    "converged",
    "enumerate_language",
    "explore",
    "format_multiset",
    "hat_word",
    "parse_multiset",
    "parse_symbols",
    "replay",
    "shortlex_words",
    "stm",
    "successors",
    "unstm",
]
