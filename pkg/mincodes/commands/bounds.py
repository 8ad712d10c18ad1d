import click

from mincodes.commands.common import emit, format_option, output_option
from mincodes.services.field_service import FieldService
from mincodes.services.search_service import SearchService
from mincodes.utils.decorators import reports_errors


@click.command("bounds")
@click.option("--k", type=int, required=True)
@click.option("--q", "field_label", required=True, help="Field order, e.g. 4 or 2^2.")
@click.option("--n", type=int, default=None, help="Also classify this length.")
@output_option
@format_option
@click.pass_obj
@reports_errors
def command(settings, k, field_label, n, sink, fmt):
    """Known bracket q(k-1) < n(k;q) <= (q-1)k(k-1)/2 + k."""
    spec = FieldService.parse_field_label(field_label)
    record = SearchService.bounds(k, spec.q).as_record()
    if n is not None:
        record["n"] = n
        record["classification"] = SearchService.classify_length(n, k, spec.q)
    emit(settings, sink, record, fmt)
