from __future__ import annotations

import logging
from typing import Callable, List, Tuple

from ..complexity.workspace import WorkspaceReport, profile_boundedness
from ..core import Result
from ..engine.multiset import parse_multiset
from ..engine.process import Verdict, Word, accepts, enumerate_language
from ..infrastructure import DocumentRepository, parse_ra, parse_sm, parse_word
from ..machines.compiler import (
    ConfigView,
    CompilationOutput,
    compile_deterministic,
    compile_machine,
    explain_config,
)
from ..machines.stackmachine import MachineRun, run, validate_restricted
from .budgets import BudgetPolicy
from .inputs import collect_words
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

logger = logging.getLogger(__name__)


def _compiled(repo: DocumentRepository, machine: str, deterministic: bool) -> CompilationOutput:
    loaded = repo.load_machine(machine)
    return compile_deterministic(loaded) if deterministic else compile_machine(loaded)


def handle_accept_word(
    repo: DocumentRepository, budgets: BudgetPolicy
) -> Callable[[AcceptWord], Result[Verdict]]:
    def _handler(query: AcceptWord) -> Result[Verdict]:
        automaton = repo.load_automaton(query.automaton)
        word = parse_word(query.word, automaton.input_alphabet)
        return Result.success(accepts(automaton, word, budgets.for_automaton(automaton, query.limits)))

    return _handler


def handle_trace_word(
    repo: DocumentRepository, budgets: BudgetPolicy
) -> Callable[[TraceWord], Result[TraceReport]]:
    def _handler(query: TraceWord) -> Result[TraceReport]:
        automaton = repo.load_automaton(query.automaton)
        word = parse_word(query.word, automaton.input_alphabet)
        verdict = accepts(automaton, word, budgets.for_automaton(automaton, query.limits))
        if query.explain_with is None or verdict.witness is None:
            return Result.success(TraceReport(verdict))
        compiled = _compiled(repo, query.explain_with, query.deterministic)
        notes = [str(explain_config(compiled, c)) for c in verdict.witness.configs]
        return Result.success(TraceReport(verdict, notes))

    return _handler


def handle_enumerate_language(
    repo: DocumentRepository, budgets: BudgetPolicy
) -> Callable[[EnumerateLanguage], Result[List[Tuple[Word, Verdict]]]]:
    def _handler(query: EnumerateLanguage) -> Result[List[Tuple[Word, Verdict]]]:
        if query.max_len < 0:
            return Result.failure("max length must be non-negative")
        automaton = repo.load_automaton(query.automaton)
        budget = budgets.for_automaton(automaton, query.limits)
        return Result.success(enumerate_language(automaton, query.max_len, budget))

    return _handler


def handle_validate_document(
    repo: DocumentRepository,
) -> Callable[[ValidateDocument], Result[ValidationReport]]:
    def _handler(query: ValidateDocument) -> Result[ValidationReport]:
        path = repo.resolve(query.document)
        text = repo.read_text(str(path))
        if path.suffix == ".sm":
            machine = parse_sm(text)
            return Result.success(
                ValidationReport("machine", machine.name or path.stem, validate_restricted(machine))
            )
        automaton = parse_ra(text, validate=False)
        return Result.success(
            ValidationReport(
                "automaton",
                automaton.name or path.stem,
                automaton.validate(),
                automaton.is_deterministic(),
            )
        )

    return _handler


def handle_run_machine(repo: DocumentRepository) -> Callable[[RunMachine], Result[MachineRun]]:
    def _handler(query: RunMachine) -> Result[MachineRun]:
        machine = repo.load_machine(query.machine)
        word = parse_word(query.word, machine.input_alphabet)
        return Result.success(run(machine, word, query.max_steps))

    return _handler


def handle_profile_workspace(
    repo: DocumentRepository, budgets: BudgetPolicy
) -> Callable[[ProfileWorkspace], Result[WorkspaceReport]]:
    def _handler(query: ProfileWorkspace) -> Result[WorkspaceReport]:
        automaton = repo.load_automaton(query.automaton)
        words = collect_words(repo, automaton.input_alphabet, query.words, query.strings_file)
        budget = budgets.for_automaton(automaton, query.limits)
        cap = query.cap if query.cap is not None else budget.max_weight
        logger.info("profiling %d string(s) with cap %d", len(words), cap)
        return Result.success(profile_boundedness(automaton, words, cap, budget))

    return _handler


def handle_step_config(repo: DocumentRepository) -> Callable[[StepConfig], Result[StepReport]]:
    def _handler(query: StepConfig) -> Result[StepReport]:
        automaton = repo.load_automaton(query.automaton)
        config = parse_multiset(query.config)
        outside = config.support - automaton.background
        if outside:
            names = " ".join(str(s) for s in sorted(outside))
            return Result.failure(f"symbols outside the background set: {names}")
        return Result.success(StepReport(config, automaton.transitions(config)))

    return _handler


def handle_explain_config(repo: DocumentRepository) -> Callable[[ExplainConfig], Result[ConfigView]]:
    def _handler(query: ExplainConfig) -> Result[ConfigView]:
        compiled = _compiled(repo, query.machine, query.deterministic)
        return Result.success(explain_config(compiled, parse_multiset(query.config)))

    return _handler
