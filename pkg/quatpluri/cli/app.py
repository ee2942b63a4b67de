"""The quatpluri command group."""

from collections.abc import Sequence

import click

from quatpluri import __version__
from quatpluri.cli.common import run
from quatpluri.cli.det import det
from quatpluri.cli.ma import ma
from quatpluri.cli.normalize import normalize
from quatpluri.cli.verify import verify


@click.group()
@click.version_option(__version__, prog_name="quatpluri")
def cli() -> None:
    """Quaternionic linear algebra: Moore determinants, real forms and the Baston operator."""


cli.add_command(det)
cli.add_command(normalize)
cli.add_command(verify)
cli.add_command(ma)


def main(argv: Sequence[str] | None = None) -> None:
    run(cli, argv)


if __name__ == "__main__":
    main()
