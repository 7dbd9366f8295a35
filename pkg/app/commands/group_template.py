"""Group-template command for vgalg."""

import json

import click

from app.errors import ConfigError, VGAlgError
from app.groups import BUILTIN_NAMES, builtin_group
from app.utils.command_utils import exit_code_for
from app.utils.report import write_atomic


@click.command()
@click.argument("name")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to this file")
def group_template(name: str, out: str | None) -> None:
    """Write the group definition file of a built-in group.

    The output is a validated table that --group accepts as a path and
    can be edited into a new group.

    Examples:
      vgalg group-template Z2
      vgalg group-template S3 --out s3.json
    """
    ctx = click.get_current_context()
    try:
        if name not in BUILTIN_NAMES:
            raise ConfigError(f"unknown group {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}")
        text = json.dumps(builtin_group(name).to_dict(), indent=2) + "\n"
    except VGAlgError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(exit_code_for(e))
        return
    if out is None:
        click.echo(text, nl=False)
    else:
        write_atomic(out, text)
        click.echo(f"wrote {name} to {out}", err=True)
