from .budgets import BudgetPolicy, Limits
from .command_handlers import handle_compile_machine, handle_export_nfa, handle_write_diagram
from .commands import CompileMachine, ExportNfa, WriteDiagram
from .queries import (
    AcceptWord,
    EnumerateLanguage,
    ExplainConfig,
    ProfileWorkspace,
    RunMachine,
    StepConfig,
    StepReport,
    TraceReport,
    TraceWord,
    ValidateDocument,
    ValidationReport,
)
from .query_handlers import (
    handle_accept_word,
    handle_enumerate_language,
    handle_explain_config,
    handle_profile_workspace,
    handle_run_machine,
    handle_step_config,
    handle_trace_word,
    handle_validate_document,
)

__all__ = [
    "AcceptWord",
    "BudgetPolicy",
    "CompileMachine",
    "EnumerateLanguage",
    "ExplainConfig",
    "ExportNfa",
    "Limits",
    "ProfileWorkspace",
    "RunMachine",
    "StepConfig",
    "StepReport",
    "TraceReport",
    "TraceWord",
    "ValidateDocument",
    "ValidationReport",
    "WriteDiagram",
    "handle_accept_word",
    "handle_compile_machine",
    "handle_enumerate_language",
    "handle_explain_config",
    "handle_export_nfa",
    "handle_profile_workspace",
    "handle_run_machine",
    "handle_step_config",
    "handle_trace_word",
    "handle_validate_document",
    "handle_write_diagram",
]
