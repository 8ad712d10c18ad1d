import click

from mincodes.commands.common import output_option
from mincodes.models.construction import ConstructionParams
from mincodes.services.construction_service import ConstructionService
from mincodes.services.field_service import FieldService
from mincodes.services.io_service import IOService
from mincodes.utils.constants import Family
from mincodes.utils.decorators import reports_errors


@click.command("construct")
@click.option("--family", type=click.Choice(Family.CHOICES), required=True)
@click.option("--k", type=int, required=True, help="Dimension.")
@click.option("--q", "field_label", required=True, help="Field order, e.g. 4 or 2^2.")
@click.option("--t", type=int, default=None, help="Split parameter for d1-d4 (k/2 < t < k).")
@click.option("--manifest", is_flag=True, help="Prefix the file with a '#' comment header.")
@output_option
@reports_errors
def command(family, k, field_label, t, manifest, sink):
    """Write a named defining set in the defining-set file format."""
    spec = FieldService.parse_field_label(field_label)
    params = ConstructionParams(family, k, spec, t)
    D = ConstructionService.build(params)
    header = ConstructionService.manifest(params, D) if manifest else None
    click.echo(IOService.serialize_defining_set(D, header), file=sink, nl=False)
