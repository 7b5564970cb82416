"""Output formatters for the rauto CLI."""

from __future__ import annotations

import io
import json
from pathlib import Path
from typing import Callable, Optional, Sequence, Tuple

import typer
from rich.console import Console
from rich.table import Table

from ..complexity.workspace import WorkspaceReport, format_word
from ..core.contracts import Outcome
from ..core.diagnostics import Diagnostic
from ..engine.multiset import Multiset, Symbol
from ..engine.process import Trace, Verdict
from ..engine.reactions import Transition
from ..machines.stackmachine import MachineRun

REPORT_FORMATS = ("table", "csv", "json")


def _word(word: Sequence[Symbol]) -> str:
    return format_word(word) or "λ"


def _render(table: Table) -> str:
    buffer = io.StringIO()
    Console(file=buffer, width=120, color_system=None).print(table)
    return buffer.getvalue().rstrip("\n")


class OutputFormatter:
    """Turns library results into text."""

    @staticmethod
    def format_verdict(verdict: Verdict) -> str:
        if verdict.outcome is Outcome.UNDECIDED:
            return f"undecided ({verdict.reason})"
        return verdict.outcome.value

    @staticmethod
    def format_trace(trace: Trace, explain: Optional[Callable[[Multiset], str]] = None) -> str:
        """One line per configuration: step, fed symbol, applied bag, result."""

        def note(config: Multiset) -> str:
            return f"    [{explain(config)}]" if explain else ""

        lines = [f"  0  {'':<3} {'':<12} {trace.initial}{note(trace.initial)}"]
        for index, step in enumerate(trace.steps, start=1):
            symbol = str(step.symbol) if step.symbol is not None else "λ"
            bag = str(step.bag) if step.bag is not None else "-"
            lines.append(f"{index:>3}  {symbol:<3} {bag:<12} {step.config}{note(step.config)}")
        return "\n".join(lines)

    @staticmethod
    def format_step(config: Multiset, transitions: Sequence[Transition]) -> str:
        lines = [f"T = {config}"]
        if not transitions:
            lines.append("En^p = {}")
            lines.append(f"Res = {{{config}}}")
            return "\n".join(lines)
        lines.append("En^p = {" + ", ".join(str(t.bag) for t in transitions) + "}")
        for t in transitions:
            lines.append(f"  {t.bag} -> {t.result}")
        results = sorted({t.result for t in transitions}, key=Multiset.sort_key)
        lines.append("Res = {" + ", ".join(str(r) for r in results) + "}")
        return "\n".join(lines)

    @staticmethod
    def format_language(rows: Sequence[Tuple[Sequence[Symbol], Verdict]]) -> str:
        return "\n".join(f"{_word(word)}\t{OutputFormatter.format_verdict(v)}" for word, v in rows)

    @staticmethod
    def format_diagnostics(diagnostics: Sequence[Diagnostic]) -> str:
        return "\n".join(f"{d.code}: {d}" for d in diagnostics)

    @staticmethod
    def format_run(run: MachineRun, show_configs: bool = False) -> str:
        lines = []
        if show_configs:
            lines.append(f"  0  {'':<4} {run.configs[0]}")
            for index, (rule, config) in enumerate(zip(run.rules, run.configs[1:]), start=1):
                lines.append(f"{index:>3}  {rule.label:<4} {config}")
        lines.append(f"{run.outcome.value} after {run.steps} step(s)")
        return "\n".join(lines)

    @staticmethod
    def format_report(report: WorkspaceReport, format_type: str = "table") -> str:
        if format_type == "csv":
            return report.to_csv().rstrip("\n")
        if format_type == "json":
            return json.dumps(report.to_dict(), indent=2)
        if format_type == "table":
            return OutputFormatter.format_report_table(report)
        raise ValueError(f"Unknown format type: {format_type}")

    @staticmethod
    def format_report_table(report: WorkspaceReport) -> str:
        table = Table(title="workspace")
        for column in ("string", "length", "ws", "trace"):
            table.add_column(column, justify="right" if column in ("length", "ws") else "left")
        for r in report.records:
            table.add_row(_word(r.word), str(r.length), "-" if r.ws is None else str(r.ws), r.trace_id or "")
        ratio = "-" if report.max_ratio is None else f"{report.max_ratio:.3f}"
        summary = (
            f"max ws/n: {ratio}  monotone: {'yes' if report.monotone else 'no'}  "
            f"growth: {report.growth_hint} (advisory)"
        )
        return _render(table) + "\n" + summary


class OutputWriter:
    """Writes formatted output to files or stdout."""

    @staticmethod
    def write(content: str, output_file: Optional[Path] = None) -> None:
        if output_file is None:
            typer.echo(content)
            return
        try:
            output_file.write_text(content if content.endswith("\n") else content + "\n", encoding="utf-8")
        except OSError as exc:
            raise OSError(f"Failed to write to {output_file}: {exc}") from exc
