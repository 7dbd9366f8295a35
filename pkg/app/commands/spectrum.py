"""Spectrum command for vgalg."""

import click

from app.partitions import Multipartition
from app.suites import rook_branching, spectrum as spectrum_suite, wreath_spectrum
from app.utils.command_utils import group_option, load_group, output_options, parse_target, run


@click.command()
@click.option("--lambda", "lam", default=None, help='Young diagram, e.g. "[2,1]"')
@click.option("--mlambda", "mlam", default=None, help='Multipartition, e.g. \'{"0":[1],"1":[1]}\'')
@click.option("--n", "n", type=int, required=True, help="Size of the rook monoid")
@click.option(
    "--branching",
    is_flag=True,
    help="Restrict to the shifted copy of Gamma(n-1, G) instead of to S(n) or G(n)",
)
@group_option
@output_options
def spectrum(
    lam: str | None,
    mlam: str | None,
    n: int,
    branching: bool,
    group_spec: str,
    fmt: str,
    out: str | None,
) -> None:
    """Decompose a rook representation T_n restricted to S(n) or G(n).

    Irreducible components are found from exact traces; the report lists
    every multiplicity and the expected one from the interlacing rule.

    Examples:
      vgalg spectrum --lambda "[2,1]" --n 5
      vgalg spectrum --mlambda '{"1":[1]}' --n 3 --group Z2
      vgalg spectrum --lambda "[1]" --n 3 --branching
    """

    def produce(config):
        group = load_group(group_spec)
        target = parse_target(lam, mlam, group)
        if branching:
            return rook_branching(target, n, group)
        if isinstance(target, Multipartition):
            return wreath_spectrum(target, n)
        return spectrum_suite(target, n)

    run(
        "spectrum",
        {"lambda": lam, "mlambda": mlam, "n": n, "branching": branching, "group": group_spec},
        produce,
        format=fmt,
        out=out,
    )
