"""Charval command for vgalg."""

import click

from app.partitions import parse_partition
from app.suites import charval as charval_suite
from app.utils.command_utils import output_options, run


@click.command()
@click.option("--lambda", "lam", required=True, help='Young diagram, e.g. "[3,1]"')
@click.option("--rho", default=None, help="Cycle type (default: every class)")
@output_options
def charval(lam: str, rho: str | None, fmt: str, out: str | None) -> None:
    """Irreducible character values of S(n) by Murnaghan-Nakayama.

    Within the bounds each value is cross-checked against the trace of the
    seminormal matrix model.

    Examples:
      vgalg charval --lambda "[2,1]"
      vgalg charval --lambda "[4,2,1]" --rho "[3,3,1]"
    """

    def produce(config):
        rhos = [parse_partition(rho)] if rho is not None else None
        return charval_suite(parse_partition(lam), rhos)

    run("charval", {"lambda": lam, "rho": rho}, produce, format=fmt, out=out)
