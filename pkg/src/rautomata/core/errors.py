"""Exception hierarchy for reaction automata."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional, Sequence

if TYPE_CHECKING:
    from .diagnostics import Diagnostic


class ReactionAutomataError(Exception):
    """Base exception for every error raised by the library."""


class MultisetError(ReactionAutomataError):
    """Base exception for multiset arithmetic errors."""


class CountUnderflowError(MultisetError):
    """Raised when a difference is taken without the subtrahend being included."""


class CountOverflowError(MultisetError):
    """Raised when a multiplicity leaves the 64-bit count range."""


class FormatError(ReactionAutomataError):
    """Raised on malformed `.ra`, `.sm` or multiset text."""

    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{line}:{column}: {message}")


class AutomatonError(ReactionAutomataError):
    """Base exception for reaction automaton misuse."""


class UnknownReactionError(AutomatonError):
    """Raised when a reaction bag names a label the automaton does not have."""


class InputSymbolError(AutomatonError):
    """Raised when an input word uses a symbol outside the input alphabet."""


class InvalidAutomatonError(AutomatonError):
    """Raised when a definition fails validation; carries the diagnostics."""

    def __init__(self, message: str, diagnostics: Optional[Sequence["Diagnostic"]] = None):
        self.diagnostics = list(diagnostics or [])
        details = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"{message}: {details}" if details else message)


class BudgetExceededError(ReactionAutomataError):
    """Raised when an explicit exploration limit is passed."""

    def __init__(self, limit_name: str, limit: int) -> None:
        self.limit_name = limit_name
        self.limit = limit
        super().__init__(f"{limit_name} exceeded (limit {limit})")


class StackMachineError(ReactionAutomataError):
    """Base exception for stack machine errors."""


class RestrictionViolation(StackMachineError):
    """Raised by the run monitor when a restriction (i), (ii) or (iii) is broken."""

    def __init__(self, condition: str, message: str) -> None:
        self.condition = condition
        super().__init__(f"restriction ({condition}) violated: {message}")


class CompilationError(ReactionAutomataError):
    """Raised when a machine cannot be compiled into a reaction automaton."""


class NfaConstructionError(ReactionAutomataError):
    """Raised when the k-bounded NFA construction cannot start."""
