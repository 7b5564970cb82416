from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Optional

from ..engine.multiset import Symbol
from ..engine.process import Word
from ..infrastructure import DocumentRepository, parse_word, parse_word_list


def collect_words(
    repo: DocumentRepository,
    alphabet: Iterable[Symbol],
    words: Iterable[str] = (),
    strings_file: Optional[Path] = None,
) -> List[Word]:
    """Words given inline followed by those listed in strings_file."""
    symbols = tuple(alphabet)
    out = [parse_word(w, symbols) for w in words]
    if strings_file is not None:
        out.extend(parse_word_list(repo.read_text(str(strings_file)), symbols))
    return out
