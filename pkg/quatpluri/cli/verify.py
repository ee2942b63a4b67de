"""Verify CLI command - run a named verification suite and emit a JSON report."""

import json
import sys
from collections.abc import Sequence
from pathlib import Path

import click
from rich.table import Table
from rich.text import Text

from quatpluri.cli.common import EXIT_FAILED, EXIT_OK, console, fail, run, setup_logging
from quatpluri.core.config import load_settings
from quatpluri.core.errors import QuatPluriError
from quatpluri.core.suites import SuiteConfig, run_suite
from quatpluri.models.report import SuiteReport


def format_status(passed: bool) -> Text:
    return Text("pass", style="green") if passed else Text("FAIL", style="bold red")


def render_table(report: SuiteReport) -> Table:
    """Per-check summary of a report."""
    table = Table(title=f"Suite {report.suite} (seed {report.seed}, {report.cases} cases)")
    table.add_column("Check", style="cyan")
    table.add_column("Cases", justify="right", style="dim")
    table.add_column("Max residual", justify="right")
    table.add_column("Threshold", justify="right", style="dim")
    table.add_column("Status")
    for check in report.checks:
        table.add_row(
            check.name,
            str(check.cases),
            f"{check.max_residual:.3e}",
            f"{check.threshold:g}",
            format_status(check.passed),
        )
    return table


@click.command(name="verify")
@click.argument("suite")
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=None,
    help="Base seed (defaults to seed in config)",
)
@click.option(
    "--cases",
    type=click.IntRange(min=1),
    default=None,
    help="Random cases per check (defaults to cases in config)",
)
@click.option("--tol", type=float, default=None, help="Structural tolerance")
@click.option(
    "--n",
    "half_dim",
    type=click.IntRange(min=1),
    default=None,
    help="Restrict dimension-indexed checks to one n",
)
@click.option(
    "--eps",
    type=click.FloatRange(min=0.0, min_open=True),
    default=None,
    help="Fix the regularization of the fundamental solution",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write the report to this file",
)
@click.option(
    "--table",
    "show_table",
    is_flag=True,
    help="Print a per-check summary table to stderr",
)
@click.option(
    "--verbose",
    is_flag=True,
    help="Enable verbose output",
)
def verify(
    suite: str,
    seed: int | None,
    cases: int | None,
    tol: float | None,
    half_dim: int | None,
    eps: float | None,
    out: Path | None,
    show_table: bool,
    verbose: bool,
) -> None:
    """Run SUITE (tau, moore, thm12, forms, dops, thm13, fundsol, invariance or all).

    Exits with 0 when every check passes.
    """
    setup_logging(verbose)
    settings = load_settings()
    config = SuiteConfig(
        seed=seed if seed is not None else settings.seed,
        cases=cases if cases is not None else settings.cases,
        tol=tol if tol is not None else settings.tolerance,
        n=half_dim,
        eps=eps,
    )
    try:
        report = run_suite(suite, config)
    except QuatPluriError as e:
        fail(e, verbose)
        return

    text = json.dumps(report.to_dict(), sort_keys=True)
    click.echo(text)
    if out is not None:
        out.write_text(text + "\n")
    if show_table:
        console.print(render_table(report))
    if not report.passed:
        names = ", ".join(c.name for c in report.failures)
        console.print(f"[red]Suite {suite} failed: {names}[/red]")
    sys.exit(EXIT_OK if report.passed else EXIT_FAILED)


def main(argv: Sequence[str] | None = None) -> None:
    run(verify, argv)


if __name__ == "__main__":
    main()
