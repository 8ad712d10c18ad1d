import os

import click

from .commands.bounds import command as bounds_cmd
from .commands.check import command as check_cmd
from .commands.construct import command as construct_cmd
from .commands.extend import command as extend_cmd
from .commands.field_info import command as field_info_cmd
from .commands.search import command as search_cmd
from .commands.selftest import command as selftest_cmd
from .commands.weights import command as weights_cmd
from .config import Settings
from .exceptions import MinCodesError
from .utils.constants import ExitCode
from .utils.log import configure_logging, level_for_verbosity


def create_cli() -> click.Group:
    @click.group(name="mincodes")
    @click.option("-v", "--verbose", count=True, help="-v for progress notes, -vv for debug detail (stderr).")
    @click.option("--progress", is_flag=True, help="Show progress bars on stderr for long enumerations.")
    @click.pass_context
    def cli(ctx, verbose, progress):
        """Minimal linear codes: constructions, minimality checks and the search for n(k;q)."""
        settings = Settings.from_env()
        configure_logging(level_for_verbosity(verbose, settings.log_level))
        if progress and not settings.testing:
            os.environ["MINCODES_PROGRESS"] = "1"
        ctx.obj = settings

    cli.add_command(construct_cmd)
    cli.add_command(check_cmd)
    cli.add_command(weights_cmd)
    cli.add_command(bounds_cmd)
    cli.add_command(search_cmd)
    cli.add_command(extend_cmd)
    cli.add_command(field_info_cmd)
    cli.add_command(selftest_cmd)
    return cli


def run(argv=None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    cli = create_cli()
    try:
        rv = cli.main(args=argv, prog_name="mincodes", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return ExitCode.DOMAIN
    except MinCodesError as e:
        click.echo(e.message, err=True)
        return e.exit_code
    return rv if isinstance(rv, int) else ExitCode.OK
