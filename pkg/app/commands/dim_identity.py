"""Dim-identity command for vgalg."""

import click

from app.suites import dim_identity as dim_identity_suite
from app.utils.command_utils import group_option, load_group, output_options, run


@click.command()
@click.option("--n", "n", type=int, required=True, help="Size of Gamma(n, G)")
@group_option
@output_options
def dim_identity(n: int, group_spec: str, fmt: str, out: str | None) -> None:
    """Compare sum (C(n,l) dim)^2 over irreducibles with |Gamma(n, G)|.

    One row per rank l; the totals and, within the bounds, an exhaustive
    count of Gamma(n, G) go to the report's extra section.

    Examples:
      vgalg dim-identity --n 5
      vgalg dim-identity --n 3 --group S3 --format text
    """
    run(
        "dim-identity",
        {"n": n, "group": group_spec},
        lambda config: dim_identity_suite(n, load_group(group_spec)),
        format=fmt,
        out=out,
    )
