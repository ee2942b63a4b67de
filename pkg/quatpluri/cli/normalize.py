"""Normalize CLI command - bring a real 2-form to normal form."""

import json
import sys
from collections.abc import Sequence
from typing import TextIO

import click

from quatpluri.cli.common import EXIT_FAILED, console, fail, run, setup_logging
from quatpluri.core.config import get_default_tolerance
from quatpluri.core.errors import QuatPluriError
from quatpluri.core.exterior import form_to_matrix, normalization_residual, normalize_real_2form
from quatpluri.models.schemas import SpectralDoc, parse_form


@click.command(name="normalize")
@click.option(
    "--json",
    "source",
    type=click.File("r"),
    default="-",
    help="Form JSON document (standard input when omitted)",
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
def normalize(source: TextIO, tol: float | None, verbose: bool) -> None:
    """Emit E and nu with tau(E)^t M tau(E) in normal form, plus the residual.

    Exits with 0 when the residual is within the tolerance.
    """
    setup_logging(verbose)
    tol = tol if tol is not None else get_default_tolerance()
    try:
        F = parse_form(source.read())
        spectral = normalize_real_2form(F, tol)
        residual = normalization_residual(form_to_matrix(F), spectral)
    except QuatPluriError as e:
        fail(e, verbose)
        return

    document = SpectralDoc.from_domain(spectral).model_dump()
    document["residual"] = residual
    click.echo(json.dumps(document, sort_keys=True))
    if residual > tol:
        console.print(f"[red]Normalization residual {residual:.3e} exceeds {tol:g}[/red]")
        sys.exit(EXIT_FAILED)


def main(argv: Sequence[str] | None = None) -> None:
    run(normalize, argv)


if __name__ == "__main__":
    main()
