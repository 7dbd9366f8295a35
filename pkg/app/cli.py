import logging
import os
import sys

import click

from app import __version__
from app.config import load_bounds, set_bounds
from app.errors import VGAlgError
from app.utils.command_utils import exit_code_for, get_command_name, set_command_name

# Define command aliases at module level
command_aliases = {
    "eigentable": ["et"],
    "verify-hecke": ["vh"],
    "verify-central": ["vc"],
    "dim-identity": ["di"],
    "spectrum": ["sp"],
    "limit": ["lim"],
    "charval": ["cv"],
    "sstar-table": ["st"],
    "group-template": ["gt"],
}

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class AliasedGroup(click.Group):
    def get_command(self, ctx, cmd_name):
        # Try to get the command normally first
        cmd = click.Group.get_command(self, ctx, cmd_name)
        if cmd is not None:
            return cmd

        # Check if the command has any aliases
        for cmd_name_actual, aliases in command_aliases.items():
            if cmd_name in aliases:
                return click.Group.get_command(self, ctx, cmd_name_actual)
        return None


def configure_logging(verbosity: int) -> None:
    logging.basicConfig(
        level=_LEVELS.get(verbosity, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def create_cli() -> click.Group:
    @click.group(
        cls=AliasedGroup,
        context_settings={
            "help_option_names": ["-h", "--help"],
            "max_content_width": 100,
        },
        invoke_without_command=True,
    )
    @click.option(
        "--config",
        "config_path",
        type=click.Path(dir_okay=False),
        default=None,
        help="JSON file with desk-scale bounds",
    )
    @click.option("-v", "--verbose", count=True, help="Log progress to stderr (repeat for more)")
    @click.version_option(__version__, prog_name="vgalg")
    @click.pass_context
    def cli(ctx: click.Context, config_path: str | None, verbose: int) -> None:
        """Exact identities of rook-monoid and wreath-product algebras at desk scale."""
        cmd_name = ""
        if ctx.parent and ctx.parent.info_name:
            cmd_name += f"{ctx.parent.info_name} "
        if ctx.info_name:
            cmd_name += ctx.info_name
        set_command_name(cmd_name or get_command_name())

        # Show help if no command is provided
        if ctx.invoked_subcommand is None:
            click.echo(ctx.get_help())
            ctx.exit()

        configure_logging(verbose)
        try:
            set_bounds(load_bounds(config_path))
        except VGAlgError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(exit_code_for(e))

    # Import all commands directly
    from .commands import (
        charval,
        dim_identity,
        eigentable,
        group_template,
        limit,
        spectrum,
        sstar_table,
        verify_central,
        verify_hecke,
    )

    # Register all commands
    cli.add_command(eigentable, name="eigentable")
    cli.add_command(verify_hecke, name="verify-hecke")
    cli.add_command(verify_central, name="verify-central")
    cli.add_command(dim_identity, name="dim-identity")
    cli.add_command(spectrum, name="spectrum")
    cli.add_command(limit, name="limit")
    cli.add_command(charval, name="charval")
    cli.add_command(sstar_table, name="sstar-table")
    cli.add_command(group_template, name="group-template")

    return cli


cli = create_cli()


def main() -> None:
    prog_name = os.path.basename(sys.argv[0])
    if prog_name in ("__main__.py", "__main__.pyc"):
        prog_name = "python -m app"
    set_command_name(prog_name.split()[-1])
    sys.argv[0] = prog_name

    try:
        sys.exit(cli.main(prog_name=prog_name))
    except VGAlgError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(exit_code_for(e))
    except Exception as e:
        click.echo(f"{get_command_name()}: unexpected error: {e}", err=True)
        if os.environ.get("DEBUG"):
            import traceback

            traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
