from __future__ import annotations

from pathlib import Path
from typing import Protocol

from ..engine.reactions import ReactionAutomaton
from ..machines.stackmachine import StackMachine


class DocumentRepository(Protocol):
    """Where `.ra` and `.sm` documents are read from and written to."""

    def resolve(self, name: str) -> Path: ...

    def load_automaton(self, name: str) -> ReactionAutomaton: ...

    def load_machine(self, name: str) -> StackMachine: ...

    def read_text(self, name: str) -> str: ...

    def write_text(self, path: Path, text: str) -> Path: ...
