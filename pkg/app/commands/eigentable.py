"""Eigentable command for vgalg."""

import click

from app.errors import ConfigError
from app.suites import delta_table, eigentable as eigentable_suite
from app.utils.command_utils import group_option, load_group, output_options, run


@click.command()
@click.option("--n", "n", type=int, required=True, help="Size of S(n), G(n) or Gamma(n, G)")
@click.option("--k", "k", type=int, default=None, help="Cycle length (default: all 1..n)")
@click.option("--psi", "psi", type=int, default=None, help="Character index of G for z^(k,psi) (default: all)")
@click.option(
    "--model",
    type=click.Choice(["sym", "rook"]),
    default="sym",
    show_default=True,
    help="sym: z^(k) on irreducibles of S(n) or G(n); rook: Delta^(k) on T_n",
)
@group_option
@output_options
def eigentable(
    n: int, k: int | None, psi: int | None, model: str, group_spec: str, fmt: str, out: str | None
) -> None:
    """Tabulate central eigenvalues against p#_k.

    With the sym model every irreducible of S(n) (or G(n) for a nontrivial
    group) is checked; with the rook model every T_n of Gamma(n, G).

    Examples:
      vgalg eigentable --n 6 --k 3
      vgalg eigentable --n 3 --group Z2 --format csv
      vgalg eigentable --n 3 --group S3 --psi 2
      vgalg eigentable --n 4 --model rook --k 2
    """

    def produce(config):
        group = load_group(group_spec)
        if model == "rook":
            if psi is not None:
                raise ConfigError("--psi applies to the sym model only")
            return delta_table(n, k, group)
        return eigentable_suite(n, k, group, psi)

    run(
        "eigentable",
        {"n": n, "k": k, "psi": psi, "model": model, "group": group_spec},
        produce,
        format=fmt,
        out=out,
    )
