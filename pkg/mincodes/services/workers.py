"""Fan work out over a process pool; falls back to a plain loop for one job."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

logger = logging.getLogger("mincodes.workers")


def run_tasks(fn: Callable, tasks: Sequence[tuple], jobs: int = 1) -> list:
    """
    Call fn(*task) for every task and return the results in task order.
    `fn` must be a module-level function so it pickles.
    """
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    workers = min(jobs, len(tasks))
    logger.info("dispatching %d tasks of %s to %d workers", len(tasks), fn.__name__, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *t) for t in tasks]
        return [f.result() for f in futures]
