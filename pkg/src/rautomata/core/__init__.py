from .bus import CommandBus, QueryBus
from .contracts import ERROR_EXIT_CODE, Command, Outcome, Query, Result
from .diagnostics import Diagnostic
from .errors import (
    AutomatonError,
    BudgetExceededError,
    CompilationError,
    CountOverflowError,
    CountUnderflowError,
    FormatError,
    InputSymbolError,
    InvalidAutomatonError,
    MultisetError,
    NfaConstructionError,
    ReactionAutomataError,
    RestrictionViolation,
    StackMachineError,
    UnknownReactionError,
)

__all__ = [
    "Command",
    "Query",
    "Result",
    "Outcome",
    "ERROR_EXIT_CODE",
    "CommandBus",
    "QueryBus",
    "Diagnostic",
    "ReactionAutomataError",
    "MultisetError",
    "CountUnderflowError",
    "CountOverflowError",
    "FormatError",
    "AutomatonError",
    "UnknownReactionError",
    "InputSymbolError",
    "InvalidAutomatonError",
    "BudgetExceededError",
    "StackMachineError",
    "RestrictionViolation",
    "CompilationError",
    "NfaConstructionError",
]
