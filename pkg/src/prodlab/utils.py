"""CLI utility functions for ProdLab."""

from __future__ import annotations

from rich.table import Table

from .core.output import Output
from .exceptions import (
    CheckFailedError,
    ConfigError,
    ExperimentError,
    ParameterError,
    ProdLabError,
    ReplicationError,
    ResultWriteError,
    SingularSystemError,
)
from .models import ExperimentKind, ExperimentResult


def handle_error(error: ProdLabError, output: Output | None = None) -> None:
    """Handle and display ProdLab errors with appropriate formatting.

    Args:
        error: The ProdLab error to handle
        output: Output channel (creates default if None)
    """
    if output is None:
        output = Output()

    if isinstance(error, ConfigError):
        output.error(f"Config Error: {error}")
    elif isinstance(error, ReplicationError):
        output.error(f"Replication Error: {error}")
        output.warning("Hint: the failing replication can be rerun alone with R=1")
    elif isinstance(error, SingularSystemError):
        output.error(f"Solver Error: {error}")
    elif isinstance(error, ExperimentError):
        output.error(f"Experiment Error: {error}")
    elif isinstance(error, ResultWriteError):
        output.error(f"Output Error: {error}")
        output.warning("Hint: choose a writable directory with --out")
    elif isinstance(error, CheckFailedError):
        output.error(f"Check Failed: {error}")
    elif isinstance(error, ParameterError):
        output.error(f"Parameter Error: {error}")
    else:
        output.error(f"Error: {error}")


def _fmt(value: float | None, spec: str = ".6g") -> str:
    return "[dim]\u2014[/dim]" if value is None else format(value, spec)


def create_summary_table(result: ExperimentResult) -> Table:
    """Create a Rich table with one row per summarized sample.

    Args:
        result: Finished experiment result

    Returns:
        Rich Table object
    """
    table = Table(show_header=True, header_style="bold blue")
    table.add_column("Series", style="cyan")
    table.add_column("Count", justify="right")
    table.add_column("Mean", justify="right", style="green")
    table.add_column("Variance", justify="right", style="green")
    table.add_column("Median", justify="right")
    table.add_column("KS", justify="right", style="magenta")

    if result.kind is ExperimentKind.FCLT:
        labels = [f"t={t:g}" for t in result.config.t_grid]
    else:
        labels = ["log statistic"]
    for label, summary, ks in zip(labels, result.summaries, result.ks_distances):
        table.add_row(
            label,
            str(summary.count),
            _fmt(summary.mean),
            _fmt(summary.variance),
            _fmt(summary.quantiles.get(0.5)),
            _fmt(ks, ".4f"),
        )
    return table


def create_rows_table(header: list[str], rows: list[tuple]) -> Table:
    """Create a Rich table from a result table (extremal, trajectory, check)."""
    table = Table(show_header=True, header_style="bold blue")
    for name in header:
        table.add_column(name, style="cyan" if name in ("name", "t", "n") else None)
    for row in rows:
        cells = []
        for value in row:
            if isinstance(value, bool):
                cells.append("[green]yes[/green]" if value else "[red]NO[/red]")
            elif isinstance(value, float):
                cells.append(format(value, ".6g"))
            else:
                cells.append(str(value))
        table.add_row(*cells)
    return table


def create_metrics_table(result: ExperimentResult) -> Table:
    """Two-column table of the scalar metrics of a run."""
    table = Table(show_header=True, header_style="bold blue")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", justify="right")
    for key, value in result.metrics.items():
        if isinstance(value, float):
            shown = format(value, ".6g")
        elif isinstance(value, list):
            shown = ", ".join(map(str, value)) or "[dim]none[/dim]"
        else:
            shown = str(value)
        table.add_row(key, shown)
    return table


def show_result(
    result: ExperimentResult, output: Output, verbose: bool = False
) -> None:
    """Print the kind-specific tables of a finished run."""
    if result.summaries:
        output.table(create_summary_table(result))
    if result.kind is ExperimentKind.EXTREMAL:
        output.table(create_rows_table(*result.tables["extremal"]))
    elif result.kind is ExperimentKind.CHECK:
        output.table(create_rows_table(*result.tables["check"]))
    elif result.kind is ExperimentKind.LIL and verbose:
        output.table(create_rows_table(*result.tables["trajectory"]))
    output.table(create_metrics_table(result))
    output.dim(
        f"seed {result.config.seed} | {result.wall_seconds:.2f}s | {result.config.out}"
    )
