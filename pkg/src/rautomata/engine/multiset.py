"""Finite multisets over decorated symbols, with the stm positional encoding."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..core.errors import CountOverflowError, CountUnderflowError, FormatError

# Counts are unsigned 64-bit values; arithmetic is checked against this bound.
MAX_COUNT = 2**64 - 1

EMPTY_TOKEN = "-"
HAT_MARK = "^"
_RESERVED = frozenset("^#|,:")
_SYMBOL_RE = re.compile(r"(?P<name>[^\s^#|,:]+)(?P<hat>\^(?!\d))?")
_ITEM_RE = re.compile(r"(?P<name>[^\s^#|,:]+)(?P<hat>\^(?!\d))?(?:\^(?P<count>\d+))?")


@dataclass(frozen=True, slots=True, order=True)
class Symbol:
    """An object of the background set; `hat` marks the decorated copy â of a."""

    name: str
    hat: bool = False

    def __post_init__(self) -> None:
        if not self.name or self.name in (EMPTY_TOKEN, "->", "λ"):
            raise ValueError(f"invalid symbol name: {self.name!r}")
        if not self.name.isprintable() or any(ch.isspace() or ch in _RESERVED for ch in self.name):
            raise ValueError(f"invalid symbol name: {self.name!r}")

    def hatted(self) -> "Symbol":
        return Symbol(self.name, True)

    def plain(self) -> "Symbol":
        return Symbol(self.name, False)

    def __str__(self) -> str:
        return self.name + HAT_MARK if self.hat else self.name

    @classmethod
    def parse(cls, token: str, line: int = 1, column: int = 1) -> "Symbol":
        match = _SYMBOL_RE.fullmatch(token)
        if match is None:
            raise FormatError(f"malformed symbol {token!r}", line, column)
        try:
            return cls(match["name"], match["hat"] is not None)
        except ValueError as exc:
            raise FormatError(str(exc), line, column) from None


def _checked(value: int) -> int:
    if value > MAX_COUNT:
        raise CountOverflowError(f"count {value} exceeds the 64-bit limit")
    return value


class Multiset(Mapping[Symbol, int]):
    """Immutable map from symbols to positive counts; absent symbols count zero."""

    __slots__ = ("_counts", "_hash", "_weight")

    _counts: Dict[Symbol, int]
    _hash: Optional[int]
    _weight: Optional[int]

    def __init__(
        self, counts: Union[Mapping[Symbol, int], Iterable[Tuple[Symbol, int]]] = ()
    ) -> None:
        items = counts.items() if isinstance(counts, Mapping) else counts
        stored: Dict[Symbol, int] = {}
        for symbol, count in items:
            if count < 0:
                raise CountUnderflowError(f"negative count {count} for {symbol}")
            if count:
                stored[symbol] = _checked(stored.get(symbol, 0) + count)
        self._counts = stored
        self._hash = None
        self._weight = None

    @classmethod
    def _trusted(cls, counts: Dict[Symbol, int]) -> "Multiset":
        # Caller guarantees positive, in-range counts.
        instance = cls.__new__(cls)
        instance._counts = counts
        instance._hash = None
        instance._weight = None
        return instance

    @classmethod
    def of(cls, *symbols: Symbol) -> "Multiset":
        counts: Dict[Symbol, int] = {}
        for symbol in symbols:
            counts[symbol] = counts.get(symbol, 0) + 1
        return cls._trusted(counts)

    @classmethod
    def from_string(cls, text: str) -> "Multiset":
        return parse_multiset(text)

    # Mapping protocol: missing symbols read as zero.
    def __getitem__(self, symbol: Symbol) -> int:
        return self._counts.get(symbol, 0)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._counts

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Multiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    @property
    def weight(self) -> int:
        if self._weight is None:
            self._weight = sum(self._counts.values())
        return self._weight

    @property
    def support(self) -> frozenset[Symbol]:
        return frozenset(self._counts)

    def is_empty(self) -> bool:
        return not self._counts

    def counts(self) -> Dict[Symbol, int]:
        return dict(self._counts)

    def sorted_items(self) -> list[Tuple[Symbol, int]]:
        return sorted(self._counts.items())

    def sort_key(self) -> Tuple[Tuple[str, bool, int], ...]:
        return tuple((s.name, s.hat, c) for s, c in self.sorted_items())

    def included_in(self, other: "Multiset") -> bool:
        theirs = other._counts
        return all(theirs.get(s, 0) >= c for s, c in self._counts.items())

    def sum(self, other: "Multiset") -> "Multiset":
        counts = dict(self._counts)
        for s, c in other._counts.items():
            counts[s] = _checked(counts.get(s, 0) + c)
        return Multiset._trusted(counts)

    def intersect(self, other: "Multiset") -> "Multiset":
        theirs = other._counts
        counts = {s: min(c, theirs[s]) for s, c in self._counts.items() if s in theirs}
        return Multiset._trusted(counts)

    def subtract(self, other: "Multiset") -> "Multiset":
        counts = dict(self._counts)
        for s, c in other._counts.items():
            left = counts.get(s, 0) - c
            if left < 0:
                raise CountUnderflowError(
                    f"cannot subtract {format_multiset(other)} from {format_multiset(self)}"
                )
            if left:
                counts[s] = left
            else:
                del counts[s]
        return Multiset._trusted(counts)

    def scale(self, n: int) -> "Multiset":
        if n < 0:
            raise CountUnderflowError(f"negative scale factor {n}")
        if n == 0:
            return EMPTY
        return Multiset._trusted({s: _checked(c * n) for s, c in self._counts.items()})

    def with_symbol(self, symbol: Symbol, count: int = 1) -> "Multiset":
        counts = dict(self._counts)
        counts[symbol] = _checked(counts.get(symbol, 0) + count)
        return Multiset._trusted(counts)

    __add__ = sum
    __sub__ = subtract
    __and__ = intersect

    def __mul__(self, n: int) -> "Multiset":
        return self.scale(n)

    def __le__(self, other: "Multiset") -> bool:
        return self.included_in(other)

    def __lt__(self, other: "Multiset") -> bool:
        return self.included_in(other) and self != other

    def __str__(self) -> str:
        return format_multiset(self)

    def __repr__(self) -> str:
        return f"Multiset({format_multiset(self)!r})"


EMPTY = Multiset()


def stm(symbols: Sequence[Symbol]) -> Multiset:
    """Encode a string positionally: the i-th symbol contributes 2**(i-1) copies."""
    counts: Dict[Symbol, int] = {}
    for position, symbol in enumerate(symbols):
        counts[symbol] = _checked(counts.get(symbol, 0) + (1 << position))
    return Multiset._trusted(counts)


def unstm(counts: Mapping[Symbol, int]) -> Optional[Tuple[Symbol, ...]]:
    """Invert stm; None when the counts are not the image of any string."""
    total = sum(counts.values())
    height = (total + 1).bit_length() - 1
    if (1 << height) - 1 != total:
        return None
    slots: list[Optional[Symbol]] = [None] * height
    for symbol, count in counts.items():
        for position in range(count.bit_length()):
            if count >> position & 1:
                if slots[position] is not None:
                    return None
                slots[position] = symbol
    if any(slot is None for slot in slots):
        return None
    return tuple(s for s in slots if s is not None)


def hat_word(symbols: Iterable[Symbol]) -> Tuple[Symbol, ...]:
    return tuple(s.hatted() for s in symbols)


def format_symbol_count(symbol: Symbol, count: int) -> str:
    return f"{symbol}^{count}" if count > 1 else str(symbol)


def format_multiset(m: Multiset) -> str:
    if m.is_empty():
        return EMPTY_TOKEN
    return " ".join(format_symbol_count(s, c) for s, c in m.sorted_items())


def _strip_comment(text: str) -> str:
    return text.split("#", 1)[0]


def iter_tokens(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (1-based column, token) for whitespace-separated tokens."""
    for match in re.finditer(r"\S+", text):
        yield match.start() + 1, match.group()


def parse_multiset(text: str, line: int = 1, offset: int = 0) -> Multiset:
    """Parse `sym` / `sym^k` items; `-` alone is the empty multiset."""
    tokens = list(iter_tokens(_strip_comment(text)))
    if not tokens:
        raise FormatError("empty multiset text (use '-')", line, offset + 1)
    if len(tokens) == 1 and tokens[0][1] == EMPTY_TOKEN:
        return EMPTY
    counts: Dict[Symbol, int] = {}
    for column, token in tokens:
        col = offset + column
        match = _ITEM_RE.fullmatch(token)
        if match is None or token == EMPTY_TOKEN:
            raise FormatError(f"malformed multiset item {token!r}", line, col)
        count = int(match["count"]) if match["count"] is not None else 1
        if count == 0:
            raise FormatError(f"zero count in {token!r}", line, col)
        try:
            symbol = Symbol(match["name"], match["hat"] is not None)
            counts[symbol] = _checked(counts.get(symbol, 0) + count)
        except (ValueError, CountOverflowError) as exc:
            raise FormatError(str(exc), line, col) from None
    return Multiset._trusted(counts)


def parse_symbols(text: str, line: int = 1, offset: int = 0) -> Tuple[Symbol, ...]:
    """Parse a whitespace-separated symbol list; `-` alone is the empty list."""
    tokens = list(iter_tokens(_strip_comment(text)))
    if len(tokens) == 1 and tokens[0][1] in (EMPTY_TOKEN, "λ"):
        return ()
    return tuple(Symbol.parse(token, line, offset + column) for column, token in tokens)
