from __future__ import annotations

import logging

import numpy as np

from mincodes.exceptions import (
    DimensionMismatchError,
    EnumerationTooLargeError,
    FieldMismatchError,
    RankDeficientError,
)
from mincodes.models.code import Codeword, DefiningSet, WeightDistribution
from mincodes.models.vector import Vector
from mincodes.services.common import chunks, message_matrix, progress, split_range
from mincodes.services.linalg_service import LinalgService
from mincodes.services.workers import run_tasks
from mincodes.utils.constants import WEIGHT_ENUMERATION_LIMIT

logger = logging.getLogger("mincodes.codes")


def _weight_counts(p: int, m: int, rows: tuple, k: int, start: int, stop: int) -> np.ndarray:
    """Worker: weight histogram of messages start..stop-1 (length n+1)."""
    from mincodes.services.field_service import FieldService

    spec = FieldService.make_field(p, m)
    columns = np.asarray(rows, dtype=np.int64).reshape(len(rows), k)
    hist = np.zeros(len(rows) + 1, dtype=np.int64)
    for lo, hi in chunks(stop - start):
        cw = spec.dot(message_matrix(k, spec, start + lo, start + hi), columns)
        hist += np.bincount(np.count_nonzero(cw, axis=1), minlength=len(rows) + 1)
    return hist


class CodeService:
    """The code C(D): validation, encoding, supports, covering and weights."""

    @staticmethod
    def validate_code(D: DefiningSet) -> bool:
        """Confirm rank D = k; zero columns are allowed and only reported."""
        rank = LinalgService.rank(D.columns)
        if rank != D.k:
            raise RankDeficientError(rank, D.k)
        zeros = D.zero_columns()
        if zeros:
            logger.info("defining set has %d inert zero column(s) at %s", len(zeros), list(zeros))
        return True

    @staticmethod
    def encode(x: Vector, D: DefiningSet) -> Codeword:
        if x.field != D.field:
            raise FieldMismatchError()
        if x.k != D.k:
            raise DimensionMismatchError(f"Error: message of length {x.k} for a k={D.k} code")
        coords = D.field.dot(x.as_array(), D.matrix)[0]
        return Codeword(tuple(int(c) for c in coords), D.field, x)

    @staticmethod
    def codeword_matrix(messages, D: DefiningSet) -> np.ndarray:
        """Codewords of a batch of messages, one row each."""
        return D.field.dot(messages, D.matrix)

    @staticmethod
    def support(c: Codeword) -> frozenset[int]:
        """0-based positions of nonzero coordinates."""
        return frozenset(i for i, v in enumerate(c.coords) if v)

    @staticmethod
    def zero_set(c: Codeword) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(c.coords) if not v)

    @staticmethod
    def covers(u: Codeword, v: Codeword) -> bool:
        """u is covered by v: Suppt(u) is a subset of Suppt(v)."""
        if u.n != v.n:
            raise DimensionMismatchError(f"Error: codewords of length {u.n} and {v.n}")
        return CodeService.support(u) <= CodeService.support(v)

    @staticmethod
    def covers_by_zero_sets(u: Codeword, v: Codeword) -> bool:
        """Same relation read through zero sets: Zero(v) is a subset of Zero(u)."""
        if u.n != v.n:
            raise DimensionMismatchError(f"Error: codewords of length {u.n} and {v.n}")
        return CodeService.zero_set(v) <= CodeService.zero_set(u)

    @staticmethod
    def hyperplane_members(y: Vector, D: DefiningSet) -> tuple[int, ...]:
        """Positions i with <y, d_i> = 0, i.e. the columns of D lying in H(y)."""
        if y.field != D.field:
            raise FieldMismatchError()
        if y.k != D.k:
            raise DimensionMismatchError()
        products = D.field.dot(y.as_array(), D.matrix)[0]
        return tuple(int(i) for i in np.flatnonzero(products == 0))

    @staticmethod
    def covers_via_hyperplanes(x: Vector, y: Vector, D: DefiningSet) -> bool:
        """c(x) is covered by c(y) exactly when H(y,D) is contained in H(x,D)."""
        return set(CodeService.hyperplane_members(y, D)) <= set(CodeService.hyperplane_members(x, D))

    @staticmethod
    def weight_distribution(D: DefiningSet, jobs: int = 1) -> WeightDistribution:
        """Exact weight counts over all q^k messages."""
        spec, k, n = D.field, D.k, D.n
        total = spec.q ** k
        if total > WEIGHT_ENUMERATION_LIMIT:
            raise EnumerationTooLargeError(
                f"Error: q^k = {total} messages exceeds the weight enumeration limit {WEIGHT_ENUMERATION_LIMIT}"
            )
        rows = tuple(D.as_rows())
        if jobs > 1:
            tasks = [(spec.p, spec.m, rows, k, lo, hi) for lo, hi in split_range(total, jobs)]
            hist = sum(run_tasks(_weight_counts, tasks, jobs))
        else:
            hist = np.zeros(n + 1, dtype=np.int64)
            for lo, hi in progress(list(chunks(total)), desc="weights"):
                cw = spec.dot(message_matrix(k, spec, lo, hi), D.matrix)
                hist += np.bincount(np.count_nonzero(cw, axis=1), minlength=n + 1)
        counts = {w: int(c) for w, c in enumerate(hist) if c}
        return WeightDistribution(counts, spec.q, k, n)
