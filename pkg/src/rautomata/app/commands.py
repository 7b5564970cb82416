from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from ..core import Command
from .budgets import Limits


@dataclass(slots=True)
class CompileMachine(Command):
    """Compile a restricted two-stack machine into a `.ra` file plus its category side table."""

    machine: str
    output: Path
    deterministic: bool = False
    side_table: Optional[Path] = None


@dataclass(slots=True)
class WriteDiagram(Command):
    automaton: str
    words: List[str] = field(default_factory=list)
    strings_file: Optional[Path] = None
    output: Optional[Path] = None
    show_bags: bool = True
    collapse_sink: bool = True
    limits: Limits = field(default_factory=Limits)


@dataclass(slots=True)
class ExportNfa(Command):
    automaton: str
    k: int
    output: Optional[Path] = None
