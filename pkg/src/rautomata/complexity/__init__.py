"""Workspace measurement and the k-bounded conversion to finite automata."""

from .nfa import NFA, NfaState, closure, nfa_accepts, to_nfa
from .workspace import (
    CSV_HEADER,
    WorkspaceRecord,
    WorkspaceReport,
    format_word,
    profile_boundedness,
    workspace,
    workspace_of_trace,
)

__all__ = [
    "CSV_HEADER",
    "NFA",
    "NfaState",
    "WorkspaceRecord",
    "WorkspaceReport",
    "closure",
    "format_word",
    "nfa_accepts",
    "profile_boundedness",
    "to_nfa",
    "workspace",
    "workspace_of_trace",
]
