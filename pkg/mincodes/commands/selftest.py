import time

import click

from mincodes.commands.common import emit, format_option, output_option
from mincodes.exceptions import CheckerDisagreementError
from mincodes.services.corpus_service import DEFAULT_SAMPLES, DEFAULT_SEED, CorpusService
from mincodes.services.minimality_service import MinimalityService
from mincodes.utils.constants import OutputFormat
from mincodes.utils.decorators import reports_errors


@click.command("selftest")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=DEFAULT_SAMPLES, show_default=True)
@output_option
@format_option
@click.pass_obj
@reports_errors
def command(settings, seed, samples, sink, fmt):
    """Cross-check all four checkers on a seeded random corpus."""
    started = time.perf_counter()
    counts = {"minimal": 0, "not_minimal": 0, "ab_inconclusive": 0}
    disagreements = []
    for i, D in enumerate(CorpusService.random_corpus(seed, samples)):
        try:
            span, _, _, ab = MinimalityService.check_all(D)
        except CheckerDisagreementError:
            disagreements.append(i)
            continue
        counts["minimal" if span.minimal else "not_minimal"] += 1
        counts["ab_inconclusive"] += int(ab.inconclusive)

    record = {"record": "selftest", "seed": seed, "samples": samples, **counts, "disagreements": disagreements}
    if fmt == OutputFormat.TEXT:
        record["wall_time"] = time.perf_counter() - started
    emit(settings, sink, record, fmt)
    if disagreements:
        raise CheckerDisagreementError(f"Error: checkers disagree on {len(disagreements)} sample(s)")
