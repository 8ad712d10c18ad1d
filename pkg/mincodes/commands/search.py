import click

from mincodes.commands.common import emit, format_option, jobs_option, jobs_or_default, output_option, timing_option
from mincodes.exceptions import BudgetExhaustedError
from mincodes.services.field_service import FieldService
from mincodes.services.search_service import SearchService
from mincodes.utils.constants import OutputFormat, SearchStatus
from mincodes.utils.decorators import reports_errors


@click.command("search")
@click.option("--k", type=click.IntRange(min=1), required=True)
@click.option("--q", "field_label", required=True, help="Field order, e.g. 4 or 2^2.")
@click.option("--n-max", type=int, default=None, help="Stop scanning after this length.")
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Backtracking node budget.")
@click.option("--prune/--no-prune", default=True, show_default=True)
@click.option("--fix-basis/--no-fix-basis", default=True, show_default=True,
              help="Fix e_1..e_k as columns (symmetry reduction).")
@jobs_option
@output_option
@format_option
@timing_option
@click.pass_obj
@reports_errors
def command(settings, k, field_label, n_max, budget, prune, fix_basis, jobs, sink, fmt, timing):
    """Determine n(k;q), or the tightest bracket the budget allows."""
    spec = FieldService.parse_field_label(field_label)
    report = SearchService.n_min(
        k, spec,
        budget=budget if budget is not None else settings.node_budget,
        n_max=n_max,
        prune=prune,
        fix_basis=fix_basis,
        jobs=jobs_or_default(settings, jobs),
    )
    emit(settings, sink, report.as_record(timing=timing or fmt == OutputFormat.TEXT), fmt)
    if report.status == SearchStatus.BUDGET_EXHAUSTED:
        raise BudgetExhaustedError(
            f"Error: budget of {report.budget} nodes exhausted; n({k};{spec.q}) in "
            f"({report.lower_exclusive}, {report.upper_inclusive}]"
        )
