"""Moore determinant CLI command - det of a hyperhermitian matrix."""

from collections.abc import Sequence
from typing import TextIO

import click

from quatpluri.cli.common import fail, format_number, run, setup_logging
from quatpluri.core.config import get_default_tolerance
from quatpluri.core.errors import QuatPluriError
from quatpluri.core.moore import moore_det
from quatpluri.models.schemas import parse_qmatrix


@click.command(name="det")
@click.option(
    "--json",
    "source",
    type=click.File("r"),
    default="-",
    help="Quaternion-matrix JSON document (standard input when omitted)",
)
@click.option(
    "--tol",
    type=float,
    default=None,
    help="Structural tolerance (defaults to tolerance in config)",
)
@click.option(
    "--verbose",
    is_flag=True,
    help="Enable verbose output",
)
def det(source: TextIO, tol: float | None, verbose: bool) -> None:
    """Print the Moore determinant of a hyperhermitian matrix."""
    setup_logging(verbose)
    tol = tol if tol is not None else get_default_tolerance()
    try:
        M = parse_qmatrix(source.read())
        click.echo(format_number(moore_det(M, tol)))
    except QuatPluriError as e:
        fail(e, verbose)


def main(argv: Sequence[str] | None = None) -> None:
    run(det, argv)


if __name__ == "__main__":
    main()
