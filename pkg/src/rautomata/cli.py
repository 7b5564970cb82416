from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any, List, NoReturn, Optional, Sequence

import typer
from rich.console import Console
from rich.markup import escape

from .app import (
    AcceptWord,
    BudgetPolicy,
    CompileMachine,
    EnumerateLanguage,
    ExplainConfig,
    ExportNfa,
    Limits,
    ProfileWorkspace,
    RunMachine,
    StepConfig,
    TraceWord,
    ValidateDocument,
    WriteDiagram,
    handle_accept_word,
    handle_compile_machine,
    handle_enumerate_language,
    handle_explain_config,
    handle_export_nfa,
    handle_profile_workspace,
    handle_run_machine,
    handle_step_config,
    handle_trace_word,
    handle_validate_document,
    handle_write_diagram,
)
from .config import RautomataConfig, load_config
from .core import ERROR_EXIT_CODE, CommandBus, Outcome, QueryBus, ReactionAutomataError, Result
from .infrastructure import FsDocumentRepository
from .infrastructure.formatters import REPORT_FORMATS, OutputFormatter, OutputWriter
from .ioc import Container

logger = logging.getLogger(__name__)

app = typer.Typer(
    add_completion=False,
    help="rauto: reaction automata, restricted two-stack machines and their compiler",
)

_stderr = Console(stderr=True, highlight=False)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# typer bundles its own click; its error base is reachable from the exported BadParameter.
_CLICK_ERROR: type[Exception] = next(
    base for base in typer.BadParameter.__mro__ if base.__name__ == "ClickException"
)

# Define Typer defaults at module scope to avoid calling in function defaults (ruff B008)
CONFIG_OPTION = typer.Option(None, "--config", help="Path to a rautomata TOML config")
VERBOSE_OPTION = typer.Option(0, "--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG")
AUTOMATON_ARGUMENT = typer.Argument(..., help="Reaction automaton (.ra path or bundled fixture name)")
MACHINE_ARGUMENT = typer.Argument(..., help="Restricted stack machine (.sm path or fixture name)")
DOCUMENT_ARGUMENT = typer.Argument(..., help="A .ra or .sm document")
WORD_ARGUMENT = typer.Argument(..., help="Input word, e.g. aabb; use - or λ for the empty word")
CONFIG_ARGUMENT = typer.Argument(..., help="Multiset, e.g. 'b^4 c d'")
MAX_WEIGHT_OPTION = typer.Option(None, "--max-weight", min=1, help="Cap on configuration weight")
MAX_STEPS_OPTION = typer.Option(None, "--max-steps", min=1, help="Cap on process length")
MAX_STATES_OPTION = typer.Option(None, "--max-states", min=1, help="Cap on explored states")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Output file (stdout if omitted)")
REQUIRED_OUTPUT_OPTION = typer.Option(..., "--output", "-o", help="Output .ra file")
SIDE_TABLE_OPTION = typer.Option(
    None, "--side-table", help="Category table path (default: output with .categories suffix)"
)
DETERMINISTIC_OPTION = typer.Option(False, "--deterministic", help="Use the deterministic construction")
EXPLAIN_WITH_OPTION = typer.Option(
    None, "--explain-with", help="Machine the automaton was compiled from; decodes each configuration"
)
MAX_LEN_OPTION = typer.Option(..., "--max-len", min=0, help="Longest word to enumerate")
MACHINE_STEPS_OPTION = typer.Option(10_000, "--max-steps", min=0, help="Step budget of the run")
SHOW_TRACE_OPTION = typer.Option(False, "--trace", help="Print every machine configuration")
STRINGS_OPTION = typer.Option(None, "--strings", help="File with one word per line")
WORD_OPTION = typer.Option(None, "--word", "-w", help="Word to include (repeatable)")
CAP_OPTION = typer.Option(None, "--cap", min=1, help="Largest workspace to try (default: max weight)")
FORMAT_OPTION = typer.Option("table", "--format", "-f", help="Output format (table, csv, json)")
K_OPTION = typer.Option(..., "--k", "-k", min=1, help="Weight bound of the automaton")
NO_BAGS_OPTION = typer.Option(False, "--no-bags", help="Omit reaction bags from edge labels")
NO_COLLAPSE_OPTION = typer.Option(False, "--no-collapse", help="Keep converged dead ends as nodes")


def _command_bus(repo: FsDocumentRepository, budgets: BudgetPolicy) -> CommandBus:
    bus = CommandBus()
    bus.register(CompileMachine, handle_compile_machine(repo))
    bus.register(WriteDiagram, handle_write_diagram(repo, budgets))
    bus.register(ExportNfa, handle_export_nfa(repo))
    return bus


def _query_bus(repo: FsDocumentRepository, budgets: BudgetPolicy) -> QueryBus:
    bus = QueryBus()
    bus.register(AcceptWord, handle_accept_word(repo, budgets))
    bus.register(TraceWord, handle_trace_word(repo, budgets))
    bus.register(EnumerateLanguage, handle_enumerate_language(repo, budgets))
    bus.register(ValidateDocument, handle_validate_document(repo))
    bus.register(RunMachine, handle_run_machine(repo))
    bus.register(ProfileWorkspace, handle_profile_workspace(repo, budgets))
    bus.register(StepConfig, handle_step_config(repo))
    bus.register(ExplainConfig, handle_explain_config(repo))
    return bus


def bootstrap(cfg: Optional[RautomataConfig] = None) -> Container:
    cfg = cfg or load_config()
    container = Container()
    repo = FsDocumentRepository(Path(cfg.automata_dir).expanduser())
    budgets = BudgetPolicy(cfg)

    container.register_singleton(RautomataConfig, cfg)
    container.register_singleton("document_repo", repo)
    container.register_singleton(BudgetPolicy, budgets)
    container.register_factory(CommandBus, lambda: _command_bus(repo, budgets))
    container.register_factory(QueryBus, lambda: _query_bus(repo, budgets))
    return container


def _configure_logging(cfg: RautomataConfig, verbose: int) -> None:
    level = logging.getLevelName(cfg.log_level)
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        filename=str(cfg.log_file) if cfg.log_file else None,
    )


def _fail(message: str) -> NoReturn:
    _stderr.print(f"[bold red]error:[/bold red] {escape(message)}")
    raise typer.Exit(code=ERROR_EXIT_CODE)


def _container(ctx: typer.Context) -> Container:
    if not isinstance(ctx.obj, Container):
        ctx.obj = bootstrap()
    return ctx.obj


def _value(result: Result[Any]) -> Any:
    if not result.ok or result.value is None:
        _fail(result.error or "Unknown error")
    return result.value


def _ask(ctx: typer.Context, query: Any) -> Any:
    bus = _container(ctx).get(QueryBus)
    return _value(bus.ask(query))


def _dispatch(ctx: typer.Context, command: Any) -> Any:
    bus = _container(ctx).get(CommandBus)
    return _value(bus.dispatch(command))


def _exit(outcome: Outcome) -> NoReturn:
    raise typer.Exit(code=outcome.exit_code)


@app.callback()
def main_callback(
    ctx: typer.Context,
    config: Optional[Path] = CONFIG_OPTION,
    verbose: int = VERBOSE_OPTION,
) -> None:
    try:
        cfg = load_config(config)
    except ReactionAutomataError as exc:
        _fail(str(exc))
    _configure_logging(cfg, verbose)
    ctx.obj = bootstrap(cfg)


@app.command()
def accept(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    word: str = WORD_ARGUMENT,
    max_weight: Optional[int] = MAX_WEIGHT_OPTION,
    max_steps: Optional[int] = MAX_STEPS_OPTION,
    max_states: Optional[int] = MAX_STATES_OPTION,
) -> None:
    """Decide membership of WORD; exit 0 accepted, 1 rejected, 2 undecided."""
    limits = Limits(max_weight, max_steps, max_states)
    verdict = _ask(ctx, AcceptWord(automaton, word, limits))
    typer.echo(OutputFormatter.format_verdict(verdict))
    _exit(verdict.outcome)


@app.command()
def trace(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    word: str = WORD_ARGUMENT,
    explain_with: Optional[str] = EXPLAIN_WITH_OPTION,
    deterministic: bool = DETERMINISTIC_OPTION,
    max_weight: Optional[int] = MAX_WEIGHT_OPTION,
    max_steps: Optional[int] = MAX_STEPS_OPTION,
    max_states: Optional[int] = MAX_STATES_OPTION,
) -> None:
    """Print a shortest accepting process for WORD."""
    limits = Limits(max_weight, max_steps, max_states)
    report = _ask(ctx, TraceWord(automaton, word, limits, explain_with, deterministic))
    verdict = report.verdict
    typer.echo(OutputFormatter.format_verdict(verdict))
    if verdict.witness is not None:
        notes = dict(zip(verdict.witness.configs, report.notes or []))
        explain = notes.__getitem__ if report.notes else None
        typer.echo(OutputFormatter.format_trace(verdict.witness, explain))
    _exit(verdict.outcome)


@app.command(name="enumerate")
def enumerate_(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    max_len: int = MAX_LEN_OPTION,
    max_weight: Optional[int] = MAX_WEIGHT_OPTION,
    max_steps: Optional[int] = MAX_STEPS_OPTION,
    max_states: Optional[int] = MAX_STATES_OPTION,
) -> None:
    """Verdict for every word up to --max-len, shortest first."""
    limits = Limits(max_weight, max_steps, max_states)
    rows = _ask(ctx, EnumerateLanguage(automaton, max_len, limits))
    typer.echo(OutputFormatter.format_language(rows))
    if any(v.outcome is Outcome.UNDECIDED for _, v in rows):
        _exit(Outcome.UNDECIDED)


@app.command()
def validate(ctx: typer.Context, document: str = DOCUMENT_ARGUMENT) -> None:
    """Check a .ra or .sm document; exit 1 when diagnostics are reported."""
    report = _ask(ctx, ValidateDocument(document))
    if not report.ok:
        typer.echo(OutputFormatter.format_diagnostics(report.diagnostics))
        _exit(Outcome.REJECTED)
    details = report.kind
    if report.deterministic is not None:
        details += ", deterministic" if report.deterministic else ", nondeterministic"
    typer.echo(f"{report.name}: ok ({details})")


@app.command(name="compile")
def compile_(
    ctx: typer.Context,
    machine: str = MACHINE_ARGUMENT,
    output: Path = REQUIRED_OUTPUT_OPTION,
    deterministic: bool = DETERMINISTIC_OPTION,
    side_table: Optional[Path] = SIDE_TABLE_OPTION,
) -> None:
    """Compile a restricted two-stack machine into a reaction automaton."""
    typer.echo(_dispatch(ctx, CompileMachine(machine, output, deterministic, side_table)))


@app.command(name="run-sm")
def run_sm(
    ctx: typer.Context,
    machine: str = MACHINE_ARGUMENT,
    word: str = WORD_ARGUMENT,
    max_steps: int = MACHINE_STEPS_OPTION,
    show_trace: bool = SHOW_TRACE_OPTION,
) -> None:
    """Run a restricted stack machine on WORD."""
    result = _ask(ctx, RunMachine(machine, word, max_steps))
    typer.echo(OutputFormatter.format_run(result, show_trace))
    _exit(result.outcome)


@app.command()
def profile(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    strings: Optional[Path] = STRINGS_OPTION,
    words: Optional[List[str]] = WORD_OPTION,
    cap: Optional[int] = CAP_OPTION,
    format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    max_steps: Optional[int] = MAX_STEPS_OPTION,
    max_states: Optional[int] = MAX_STATES_OPTION,
) -> None:
    """Workspace of every accepted word plus advisory growth figures."""
    if format not in REPORT_FORMATS:
        _fail(f"Invalid format '{format}'. Must be one of: {', '.join(REPORT_FORMATS)}")
    if strings is None and not words:
        _fail("give --strings FILE or at least one --word")
    limits = Limits(max_steps=max_steps, max_states=max_states)
    query = ProfileWorkspace(automaton, list(words or []), strings, cap, limits)
    report = _ask(ctx, query)
    OutputWriter.write(OutputFormatter.format_report(report, format), output)


@app.command(name="to-nfa")
def to_nfa(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    k: int = K_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
) -> None:
    """Finite automaton (DOT) for the weight-k fragment of a reaction automaton."""
    dot = _dispatch(ctx, ExportNfa(automaton, k, output))
    typer.echo(f"wrote {output}" if output is not None else dot.rstrip("\n"))


@app.command()
def diagram(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    strings: Optional[Path] = STRINGS_OPTION,
    words: Optional[List[str]] = WORD_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    no_bags: bool = NO_BAGS_OPTION,
    no_collapse: bool = NO_COLLAPSE_OPTION,
    max_weight: Optional[int] = MAX_WEIGHT_OPTION,
    max_steps: Optional[int] = MAX_STEPS_OPTION,
    max_states: Optional[int] = MAX_STATES_OPTION,
) -> None:
    """Reaction diagram (DOT) of the processes for the given words."""
    command = WriteDiagram(
        automaton,
        list(words or []),
        strings,
        output,
        show_bags=not no_bags,
        collapse_sink=not no_collapse,
        limits=Limits(max_weight, max_steps, max_states),
    )
    dot = _dispatch(ctx, command)
    typer.echo(f"wrote {output}" if output is not None else dot.rstrip("\n"))


@app.command()
def step(
    ctx: typer.Context,
    automaton: str = AUTOMATON_ARGUMENT,
    config: str = CONFIG_ARGUMENT,
) -> None:
    """Show En^p and Res for one configuration."""
    report = _ask(ctx, StepConfig(automaton, config))
    typer.echo(OutputFormatter.format_step(report.config, report.transitions))


@app.command()
def explain(
    ctx: typer.Context,
    machine: str = MACHINE_ARGUMENT,
    config: str = CONFIG_ARGUMENT,
    deterministic: bool = DETERMINISTIC_OPTION,
) -> None:
    """Decode a configuration of the automaton compiled from MACHINE."""
    typer.echo(str(_ask(ctx, ExplainConfig(machine, config, deterministic))))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit status; usage errors map to the error code."""
    args = list(sys.argv[1:] if argv is None else argv)
    command = typer.main.get_command(app)
    try:
        rv = command.main(args=args, prog_name="rauto", standalone_mode=False)
    except typer.Abort:
        _stderr.print("[bold red]aborted[/bold red]")
        return ERROR_EXIT_CODE
    except _CLICK_ERROR as exc:
        _stderr.print(f"[bold red]error:[/bold red] {escape(str(exc))}")
        return ERROR_EXIT_CODE
    return rv if isinstance(rv, int) else 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
