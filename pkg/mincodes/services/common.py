"""Shared service helpers: primality, message enumeration, progress bars."""

from __future__ import annotations

import logging
import os
from typing import Iterable, Iterator

import numpy as np
from tqdm import tqdm

from mincodes.models.field import FieldSpec
from mincodes.models.registry import FieldRegistry
from mincodes.utils.constants import MESSAGE_CHUNK

logger = logging.getLogger("mincodes.common")


def _registry() -> FieldRegistry:
    """Get the singleton field registry."""
    return FieldRegistry.instance()


# -------- integer helpers --------
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    return (p, m) if rest == 1 else None


def projective_count(k: int, q: int) -> int:
    """(q^k - 1) / (q - 1)."""
    return (q ** k - 1) // (q - 1)


# -------- message space --------
def message_matrix(k: int, spec: FieldSpec, start: int = 0, stop: int | None = None) -> np.ndarray:
    """
    Rows start..stop-1 of F_q^k in lexicographic order (first coordinate
    most significant), as an (stop-start) x k array of encodings.
    """
    q = spec.q
    stop = q ** k if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def chunks(total: int, size: int = MESSAGE_CHUNK) -> Iterator[tuple[int, int]]:
    for start in range(0, total, size):
        yield start, min(total, start + size)


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut [0, total) into at most `parts` contiguous, nearly equal pieces."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


# -------- progress --------
def progress_disabled() -> bool:
    return os.getenv("MINCODES_ENV") == "test" or os.getenv("MINCODES_PROGRESS") != "1"


def progress(iterable: Iterable, total: int | None = None, desc: str = "") -> Iterable:
    """Wrap `iterable` in a stderr tqdm bar when progress output is enabled."""
    return tqdm(iterable, total=total, desc=desc, leave=False, disable=progress_disabled())
