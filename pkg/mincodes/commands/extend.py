import click

from mincodes.commands.common import input_option, output_option
from mincodes.services.construction_service import ConstructionService
from mincodes.services.io_service import IOService
from mincodes.utils.constants import Padding
from mincodes.utils.decorators import reports_errors


@click.command("extend")
@click.option("--target-n", type=int, required=True)
@click.option("--padding", type=click.Choice(Padding.CHOICES), default=Padding.REPEAT_LAST, show_default=True)
@click.option("--source", "padding_file", type=click.File("r"), default=None,
              help="Defining set whose columns pad the input (from_file).")
@input_option
@output_option
@reports_errors
def command(target_n, padding, padding_file, source, sink):
    """Pad a defining set to a longer length; minimal codes stay minimal."""
    if padding == Padding.FROM_FILE and padding_file is None:
        raise click.UsageError("--padding from_file needs --source")
    if padding != Padding.FROM_FILE and padding_file is not None:
        raise click.UsageError("--source is only used with --padding from_file")
    D = IOService.parse_defining_set(source)
    extra = IOService.parse_defining_set(padding_file) if padding_file is not None else None
    extended = ConstructionService.extend(D, target_n, padding, extra)
    click.echo(IOService.serialize_defining_set(extended), file=sink, nl=False)
