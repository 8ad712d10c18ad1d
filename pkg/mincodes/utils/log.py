"""Logging setup shared by the CLI and scripts."""

from __future__ import annotations

import logging
import sys

LOG_FORMAT = "[%(name)s] %(levelname)s %(message)s"

_handler: logging.Handler | None = None


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is at emit time (click's test runner swaps it)."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """
    Attach a single stderr handler to the `mincodes` logger.
    Safe to call repeatedly; later calls only change the level.
    """
    global _handler
    root = logging.getLogger("mincodes")
    if _handler is None:
        _handler = _StderrHandler()
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(_handler)
        root.propagate = False
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    root.setLevel(level)
    return root


def level_for_verbosity(verbose: int, default: str = "WARNING") -> str:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return default
