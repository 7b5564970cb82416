from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Generic, Optional, TypeVar

T = TypeVar("T")


class Command:
    """Marker base class for operations that write artifacts (compiled automata, diagrams)."""


class Query(Generic[T]):
    """Marker base class for read-only operations returning type T."""


class Outcome(Enum):
    """Three-way verdict shared by RA acceptance and stack machine runs."""

    ACCEPTED = "accepted"
    REJECTED = "rejected"
    UNDECIDED = "undecided"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES = {Outcome.ACCEPTED: 0, Outcome.REJECTED: 1, Outcome.UNDECIDED: 2}

# Anything above the outcome codes is an error.
ERROR_EXIT_CODE = 3


@dataclass(slots=True)
class Result(Generic[T]):
    ok: bool
    value: Optional[T] = None
    error: Optional[str] = None

    @staticmethod
    def success(value: Optional[T] = None) -> "Result[T]":
        return Result(ok=True, value=value)

    @staticmethod
    def failure(error: str) -> "Result[Any]":
        return Result(ok=False, error=error)
