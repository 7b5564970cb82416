from __future__ import annotations

import logging
from importlib import resources
from pathlib import Path
from typing import List, Optional

from ..core.errors import ReactionAutomataError
from ..engine.reactions import ReactionAutomaton
from ..machines.stackmachine import StackMachine
from .ra_format import parse_ra
from .repositories import DocumentRepository
from .sm_format import parse_sm

logger = logging.getLogger(__name__)

SUFFIXES = (".ra", ".sm")


class DocumentNotFoundError(ReactionAutomataError):
    """Raised when a document name resolves to no readable file."""


def bundled_fixtures_dir() -> Path:
    return Path(str(resources.files("rautomata") / "fixtures"))


class FsDocumentRepository(DocumentRepository):
    """Resolves names as paths, then inside the automata dir, then among bundled fixtures."""

    def __init__(self, automata_dir: Optional[Path] = None, include_fixtures: bool = True) -> None:
        self.automata_dir = automata_dir
        self.search_dirs: List[Path] = []
        if automata_dir is not None:
            self.search_dirs.append(automata_dir)
        if include_fixtures:
            self.search_dirs.append(bundled_fixtures_dir())

    def resolve(self, name: str) -> Path:
        direct = Path(name).expanduser()
        if direct.is_file():
            return direct
        for directory in self.search_dirs:
            for candidate in (directory / name, *(directory / f"{name}{s}" for s in SUFFIXES)):
                if candidate.is_file():
                    logger.debug("resolved %s to %s", name, candidate)
                    return candidate
        raise DocumentNotFoundError(f"no such automaton or machine file: {name}")

    def read_text(self, name: str) -> str:
        return self.resolve(name).read_text(encoding="utf-8")

    def load_automaton(self, name: str) -> ReactionAutomaton:
        return parse_ra(self.read_text(name))

    def load_machine(self, name: str) -> StackMachine:
        return parse_sm(self.read_text(name))

    def write_text(self, path: Path, text: str) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise ReactionAutomataError(f"Failed to write to {path}: {exc}") from exc
        logger.info("wrote %s", path)
        return path
