"""Verify-central command for vgalg."""

import click

from app.suites import verify_central as verify_central_suite
from app.utils.command_utils import group_option, load_group, output_options, run


@click.command()
@click.option("--n", "n", type=int, required=True, help="Size of the semigroup algebra")
@click.option("--k", "k", type=int, default=3, show_default=True, help="Largest cycle length")
@group_option
@output_options
def verify_central(n: int, k: int, group_spec: str, fmt: str, out: str | None) -> None:
    """Check centrality, truncation consistency and shift identities.

    Covers z^(k), Delta^(k) (or Delta(k, phi)), alpha_1, the elements u_i,
    2u_i = xi^(i-1) Delta^(2) - xi^i Delta^(2), and the commutation of
    labelled cycles with eps_bar products.

    Examples:
      vgalg verify-central --n 5
      vgalg verify-central --n 3 --k 2 --group Z2
    """
    run(
        "verify-central",
        {"n": n, "k": k, "group": group_spec},
        lambda config: verify_central_suite(n, k, load_group(group_spec)),
        format=fmt,
        out=out,
    )
