"""Shared tokenizer for the line-oriented `.ra` and `.sm` formats."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..core.errors import FormatError


@dataclass(frozen=True, slots=True)
class Entry:
    """A `key: value` line; columns are 1-based positions in the original line."""

    line: int
    key: str
    key_column: int
    value: str
    value_column: int

    def split(self, separator: str) -> List[Tuple[str, int]]:
        """Split the value on separator, keeping the column of every part."""
        parts: List[Tuple[str, int]] = []
        column = self.value_column
        for piece in self.value.split(separator):
            parts.append((piece, column))
            column += len(piece) + len(separator)
        return parts


def iter_entries(text: str) -> Iterator[Entry]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        colon = content.find(":")
        if colon < 0:
            column = len(content) - len(content.lstrip()) + 1
            raise FormatError("expected 'key: value'", number, column)
        key = content[:colon].strip()
        if not key or any(ch.isspace() for ch in key):
            raise FormatError(f"malformed key {key!r}", number, 1)
        key_column = content.find(key) + 1
        yield Entry(number, key, key_column, content[colon + 1 :], colon + 2)


def require(headers: dict[str, Entry], key: str) -> Entry:
    if key not in headers:
        raise FormatError(f"missing '{key}:' declaration", 1, 1)
    return headers[key]
