"""Shared plumbing for the CLI commands: console, logging, exit codes, number format."""

import logging
import sys
from collections.abc import Sequence

import click
from rich.console import Console
from rich.logging import RichHandler

from quatpluri.core.config import get_log_level
from quatpluri.core.errors import DocumentError, PreconditionError, QuatPluriError, UnknownSuiteError

# Results go to stdout; everything else goes here
console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_USAGE = 4


def setup_logging(verbose: bool) -> None:
    """Attach a rich handler to the package logger (idempotent)."""
    logger = logging.getLogger("quatpluri")
    level = logging.DEBUG if verbose else getattr(logging, get_log_level(), logging.WARNING)
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=console, show_path=False))


def format_number(value: float) -> str:
    """Scientific notation with 15 significant digits and a bare exponent, e.g. 1.00000000000000e0."""
    mantissa, exponent = f"{value:.14e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def exit_code_for(error: QuatPluriError) -> int:
    if isinstance(error, DocumentError):
        return EXIT_PARSE
    if isinstance(error, UnknownSuiteError):
        return EXIT_USAGE
    if isinstance(error, PreconditionError):
        return EXIT_PRECONDITION
    return EXIT_FAILED


def fail(error: QuatPluriError, verbose: bool = False) -> None:
    """Report a library error on stderr and exit with its code."""
    if verbose:
        console.print_exception()
    console.print(f"[red]Error: {error}[/red]")
    sys.exit(exit_code_for(error))


def parse_point(text: str) -> list[float]:
    """Parse a comma-separated list of reals."""
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise click.BadParameter(f"Expected comma-separated numbers, got '{text}'") from e


def run(command: click.Command, argv: Sequence[str] | None = None) -> None:
    """Invoke a command with usage errors mapped to exit code 4."""
    try:
        rv = command.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        sys.exit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        sys.exit(EXIT_PARSE)
    except click.Abort:
        console.print("[yellow]Aborted[/yellow]")
        sys.exit(EXIT_FAILED)
    sys.exit(rv if isinstance(rv, int) else EXIT_OK)
