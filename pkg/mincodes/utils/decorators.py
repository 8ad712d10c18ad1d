import dataclasses
import logging
import time
from functools import wraps

import click

from mincodes.exceptions import MinCodesError

logger = logging.getLogger("mincodes.cli")


def reports_errors(fn):
    """
    Turn a MinCodesError escaping a command into a diagnostic on stderr and
    the error's exit code.
    """
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except MinCodesError as e:
            logger.debug("command failed: %r", e)
            click.echo(e.message, err=True)
            raise click.exceptions.Exit(e.exit_code)

    return wrapper


def timed(fn):
    """Fill the `wall_time` field of the dataclass the wrapped call returns."""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        started = time.perf_counter()
        result = fn(*args, **kwargs)
        if dataclasses.is_dataclass(result) and hasattr(result, "wall_time"):
            result = dataclasses.replace(result, wall_time=time.perf_counter() - started)
        return result

    return wrapper
