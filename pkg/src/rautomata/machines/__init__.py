"""Restricted multistack machines and their compilation into reaction automata."""

from .compiler import (
    Category,
    CompilationOutput,
    ConfigView,
    ViewKind,
    compile_deterministic,
    compile_machine,
    explain_config,
    looks_compiled,
)
from .stackmachine import (
    Halt,
    MachineConfig,
    MachineRule,
    MachineRun,
    RunMonitor,
    StackMachine,
    run,
    step,
    validate_restricted,
)

__all__ = [
    "Category",
    "CompilationOutput",
    "ConfigView",
    "Halt",
    "MachineConfig",
    "MachineRule",
    "MachineRun",
    "RunMonitor",
    "StackMachine",
    "ViewKind",
    "compile_deterministic",
    "compile_machine",
    "explain_config",
    "looks_compiled",
    "run",
    "step",
    "validate_restricted",
]
