"""Input words on the command line and in string-list files."""

from __future__ import annotations

from typing import Iterable, List

from ..engine.multiset import Symbol, parse_symbols
from ..engine.process import Word

EMPTY_WORDS = ("", "-", "λ")


def parse_word(text: str, alphabet: Iterable[Symbol] = (), line: int = 1) -> Word:
    """Read a word: `aabb` when every symbol is one character, `a' b'` otherwise.

    A bare token naming a multi-character input symbol is read as that symbol.
    """
    stripped = text.strip()
    if stripped in EMPTY_WORDS:
        return ()
    if any(ch.isspace() for ch in stripped):
        return parse_symbols(stripped, line)
    names = {s.name for s in alphabet if not s.hat}
    if stripped in names and len(stripped) > 1:
        return (Symbol(stripped),)
    return tuple(Symbol.parse(ch, line, column) for column, ch in enumerate(stripped, start=1))


def parse_word_list(text: str, alphabet: Iterable[Symbol] = ()) -> List[Word]:
    """One word per line; `#` starts a comment, `λ` or `-` is the empty word."""
    symbols = tuple(alphabet)
    words: List[Word] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        words.append(parse_word(content, symbols, number))
    return words
