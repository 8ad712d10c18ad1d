"""Options and output helpers shared by the commands."""

import click

from mincodes.config import Settings
from mincodes.services.io_service import IOService
from mincodes.utils.constants import OutputFormat

format_option = click.option(
    "--format", "fmt",
    type=click.Choice(OutputFormat.CHOICES),
    default=OutputFormat.TEXT,
    show_default=True,
    help="Human-readable report or one JSON record per line.",
)
input_option = click.option(
    "--input", "source",
    type=click.File("r"),
    default="-",
    help="Defining-set file (default: stdin).",
)
output_option = click.option(
    "--output", "sink",
    type=click.File("w"),
    default="-",
    help="Where to write (default: stdout).",
)
jobs_option = click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes.")
timing_option = click.option("--timing", is_flag=True, help="Include wall time in structured records.")


def jobs_or_default(settings: Settings, jobs: int | None) -> int:
    return jobs if jobs is not None else settings.jobs


def emit(settings: Settings, sink, record: dict, fmt: str) -> None:
    click.echo(IOService.render_record(record, fmt, settings.timezone), file=sink, nl=False)
