from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from ..complexity.workspace import WorkspaceReport
from ..core import Diagnostic, Query
from ..engine.multiset import Multiset
from ..engine.process import Verdict, Word
from ..engine.reactions import Transition
from ..machines.compiler import ConfigView
from ..machines.stackmachine import MachineRun
from .budgets import Limits


@dataclass(slots=True)
class AcceptWord(Query[Verdict]):
    automaton: str
    word: str
    limits: Limits = field(default_factory=Limits)


@dataclass(slots=True)
class TraceWord(Query["TraceReport"]):
    """Like AcceptWord, optionally decoding each configuration against a compiled machine."""

    automaton: str
    word: str
    limits: Limits = field(default_factory=Limits)
    explain_with: Optional[str] = None
    deterministic: bool = False


@dataclass(slots=True)
class TraceReport:
    verdict: Verdict
    notes: Optional[List[str]] = None


@dataclass(slots=True)
class EnumerateLanguage(Query[List[Tuple[Word, Verdict]]]):
    automaton: str
    max_len: int
    limits: Limits = field(default_factory=Limits)


@dataclass(slots=True)
class ValidateDocument(Query["ValidationReport"]):
    document: str


@dataclass(slots=True)
class ValidationReport:
    kind: str
    name: str
    diagnostics: List[Diagnostic] = field(default_factory=list)
    deterministic: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return not self.diagnostics


@dataclass(slots=True)
class RunMachine(Query[MachineRun]):
    machine: str
    word: str
    max_steps: int = 10_000


@dataclass(slots=True)
class ProfileWorkspace(Query[WorkspaceReport]):
    """Workspace per accepted word; cap defaults to the budget's max_weight."""

    automaton: str
    words: List[str] = field(default_factory=list)
    strings_file: Optional[Path] = None
    cap: Optional[int] = None
    limits: Limits = field(default_factory=Limits)


@dataclass(slots=True)
class StepConfig(Query["StepReport"]):
    automaton: str
    config: str


@dataclass(slots=True)
class StepReport:
    config: Multiset
    transitions: List[Transition]


@dataclass(slots=True)
class ExplainConfig(Query[ConfigView]):
    machine: str
    config: str
    deterministic: bool = False
