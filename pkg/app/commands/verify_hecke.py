"""Verify-hecke command for vgalg."""

import click

from app.suites import verify_relations
from app.utils.command_utils import group_option, load_group, output_options, run


@click.command()
@click.option("--n", "n", type=int, required=True, help="Size of the semigroup algebra")
@group_option
@output_options
def verify_hecke(n: int, group_spec: str, fmt: str, out: str | None) -> None:
    """Check the rook-monoid presentation and the u_k commutation relations.

    Relations involve s_i, eps_i, u_i(G) and labels g^(i) with indices up
    to 4 and are compared as exact algebra elements.

    Examples:
      vgalg verify-hecke --n 5
      vgalg verify-hecke --n 4 --group Z2
    """
    run(
        "verify-hecke",
        {"n": n, "group": group_spec},
        lambda config: verify_relations(n, load_group(group_spec)),
        format=fmt,
        out=out,
    )
