from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Optional

from ..complexity.nfa import to_nfa
from ..core import Result
from ..infrastructure import (
    DiagramSpec,
    DocumentRepository,
    emit_diagram,
    format_ra,
    nfa_to_dot,
)
from ..machines.compiler import compile_deterministic, compile_machine
from .budgets import BudgetPolicy
from .commands import CompileMachine, ExportNfa, WriteDiagram
from .inputs import collect_words

logger = logging.getLogger(__name__)


def _deliver(repo: DocumentRepository, text: str, output: Optional[Path]) -> str:
    # Without an output file the text itself is the result.
    if output is not None:
        repo.write_text(output, text)
    return text


def handle_compile_machine(repo: DocumentRepository) -> Callable[[CompileMachine], Result[str]]:
    def _handler(cmd: CompileMachine) -> Result[str]:
        machine = repo.load_machine(cmd.machine)
        compiled = compile_deterministic(machine) if cmd.deterministic else compile_machine(machine)
        automaton = compiled.automaton
        repo.write_text(cmd.output, format_ra(automaton))
        table = cmd.side_table or cmd.output.with_suffix(".categories")
        repo.write_text(table, compiled.side_table())
        return Result.success(
            f"wrote {cmd.output} ({len(automaton.reactions)} reactions) and {table}"
        )

    return _handler


def handle_write_diagram(
    repo: DocumentRepository, budgets: BudgetPolicy
) -> Callable[[WriteDiagram], Result[str]]:
    def _handler(cmd: WriteDiagram) -> Result[str]:
        automaton = repo.load_automaton(cmd.automaton)
        words = tuple(collect_words(repo, automaton.input_alphabet, cmd.words, cmd.strings_file))
        request = DiagramSpec(automaton, words, cmd.show_bags, cmd.collapse_sink)
        dot = emit_diagram(request, budgets.for_automaton(automaton, cmd.limits))
        return Result.success(_deliver(repo, dot, cmd.output))

    return _handler


def handle_export_nfa(repo: DocumentRepository) -> Callable[[ExportNfa], Result[str]]:
    def _handler(cmd: ExportNfa) -> Result[str]:
        automaton = repo.load_automaton(cmd.automaton)
        nfa = to_nfa(automaton, cmd.k)
        logger.info("NFA for %s: %d state(s), %d final", automaton.name, len(nfa.states), len(nfa.finals))
        name = f"{automaton.name or 'nfa'}_k{cmd.k}"
        return Result.success(_deliver(repo, nfa_to_dot(nfa, name), cmd.output))

    return _handler
