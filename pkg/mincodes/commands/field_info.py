import click

from mincodes.commands.common import emit, format_option, output_option
from mincodes.services.field_service import FieldService
from mincodes.utils.decorators import reports_errors


@click.command("field-info")
@click.option("--q", "field_label", default=None, help="Field order, e.g. 9 or 3^2.")
@click.option("--p", type=int, default=None)
@click.option("--m", type=int, default=1, show_default=True)
@click.option("--elements", is_flag=True, help="List the nonzero element encodings.")
@output_option
@format_option
@click.pass_obj
@reports_errors
def command(settings, field_label, p, m, elements, sink, fmt):
    """Show the canonical modulus and table mode of GF(q)."""
    if (field_label is None) == (p is None):
        raise click.UsageError("give either --q or --p (with --m)")
    spec = FieldService.parse_field_label(field_label) if field_label else FieldService.make_field(p, m)
    record = {"record": "field", **spec.describe()}
    if elements:
        record["nonzero"] = [e.value for e in FieldService.enumerate_nonzero(spec)]
    emit(settings, sink, record, fmt)
