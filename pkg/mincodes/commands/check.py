import click

from mincodes.commands.common import emit, format_option, input_option, jobs_option, jobs_or_default, output_option, \
    timing_option
from mincodes.services.io_service import IOService
from mincodes.services.minimality_service import MinimalityService
from mincodes.utils.constants import Method, OutputFormat
from mincodes.utils.decorators import reports_errors


@click.command("check")
@click.option("--method", type=click.Choice(Method.CHOICES), default=Method.SPAN, show_default=True)
@click.option("--identity", is_flag=True, help="Also report the incidence counting identity.")
@input_option
@output_option
@jobs_option
@format_option
@timing_option
@click.pass_obj
@reports_errors
def command(settings, method, identity, source, sink, jobs, fmt, timing):
    """Decide whether the code of a defining set is minimal."""
    D = IOService.parse_defining_set(source)
    jobs = jobs_or_default(settings, jobs)
    show_time = timing or fmt == OutputFormat.TEXT

    if method == Method.ALL:
        verdicts = MinimalityService.check_all(D, jobs=jobs)
    else:
        verdicts = (MinimalityService.check(D, method, jobs=jobs),)
    for verdict in verdicts:
        emit(settings, sink, verdict.as_record(timing=show_time), fmt)

    if identity:
        lhs, rhs = MinimalityService.counting_identity(D)
        emit(settings, sink, {"record": "identity", "lhs": lhs, "rhs": rhs}, fmt)
