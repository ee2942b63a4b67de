"""Monge-Ampère CLI command - mixed quaternionic Monge-Ampère operator at a point."""

from collections.abc import Sequence
from typing import TextIO

import click

from quatpluri.cli.common import fail, format_number, parse_point, run, setup_logging
from quatpluri.core.baston import ma_mixed
from quatpluri.core.config import get_default_tolerance
from quatpluri.core.errors import QuatPluriError, ShapeError
from quatpluri.models.schemas import parse_field


@click.command(name="ma")
@click.option(
    "--json",
    "sources",
    type=click.File("r"),
    multiple=True,
    required=True,
    help="Field document (polynomial or expression tree); give one per field",
)
@click.option(
    "--point",
    required=True,
    help="Evaluation point as comma-separated coordinates x0,x1,...",
)
@click.option(
    "--n",
    "half_dim",
    type=click.IntRange(min=1),
    default=None,
    help="Quaternionic dimension (inferred from the point when omitted)",
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
def ma(
    sources: tuple[TextIO, ...],
    point: str,
    half_dim: int | None,
    tol: float | None,
    verbose: bool,
) -> None:
    """Print det(u1, ..., un) at the point."""
    setup_logging(verbose)
    tol = tol if tol is not None else get_default_tolerance()
    q = parse_point(point)
    try:
        if half_dim is not None and len(q) != 4 * half_dim:
            raise ShapeError(f"Point has {len(q)} coordinates, expected {4 * half_dim}")
        fields = [parse_field(source.read()) for source in sources]
        click.echo(format_number(ma_mixed(fields, q, tol)))
    except QuatPluriError as e:
        fail(e, verbose)


def main(argv: Sequence[str] | None = None) -> None:
    run(ma, argv)


if __name__ == "__main__":
    main()
