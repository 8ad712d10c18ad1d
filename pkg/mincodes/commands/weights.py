import click

from mincodes.commands.common import emit, format_option, input_option, jobs_option, jobs_or_default, output_option
from mincodes.services.code_service import CodeService
from mincodes.services.io_service import IOService
from mincodes.utils.decorators import reports_errors


@click.command("weights")
@input_option
@output_option
@jobs_option
@format_option
@click.pass_obj
@reports_errors
def command(settings, source, sink, jobs, fmt):
    """Weight distribution of C(D) over all messages."""
    D = IOService.parse_defining_set(source)
    dist = CodeService.weight_distribution(D, jobs=jobs_or_default(settings, jobs))
    emit(settings, sink, {"record": "weights", **dist.as_record()}, fmt)
