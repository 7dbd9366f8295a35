"""Sstar-table command for vgalg."""

import click

from app.suites import sstar_table as sstar_table_suite
from app.utils.command_utils import output_options, run


@click.command()
@click.option("--n", "n", type=int, required=True, help="Largest diagram size")
@output_options
def sstar_table(n: int, fmt: str, out: str | None) -> None:
    """Tabulate s*_lambda(nu) for diagrams with at most n boxes.

    Checks that s*_lambda vanishes unless lambda fits in nu, is nonzero
    when it does, and equals |lambda|!/dim lambda at nu = lambda.

    Example:
      vgalg sstar-table --n 4 --format csv
    """
    run("sstar-table", {"n": n}, lambda config: sstar_table_suite(n), format=fmt, out=out)
