"""
Minimality checkers for C(D).

Every checker walks nonzero messages through their projective
representatives (first nonzero coordinate 1). This loses nothing: H(ay) = H(y)
and c(ay) = a c(y) have the same support for every a != 0, so the verdict of
a representative is the verdict of its whole scalar class.

Negative verdicts always name the first failure in projective order, which
keeps witnesses identical whatever the worker count.
"""

from __future__ import annotations

import logging

import numpy as np

from mincodes.exceptions import (
    CheckerDisagreementError,
    DimensionMismatchError,
    EnumerationTooLargeError,
    ZeroColumnPresentError,
    ZeroVectorError,
)
from mincodes.models.code import DefiningSet
from mincodes.models.vector import Subspace, Vector
from mincodes.models.verdict import HyperplaneWitness, MinimalityVerdict, PairWitness
from mincodes.services.code_service import CodeService
from mincodes.services.common import chunks, split_range
from mincodes.services.linalg_service import EchelonBasis, LinalgService
from mincodes.services.workers import run_tasks
from mincodes.utils.constants import INCONCLUSIVE, PAIR_ENUMERATION_LIMIT, Method
from mincodes.utils.decorators import timed

logger = logging.getLogger("mincodes.minimality")


def _span_dim(rows, members, spec, k: int) -> int:
    """dim of the span of rows[i] for i in members, stopping once it reaches k-1."""
    basis = EchelonBasis(spec, k)
    for i in members:
        if basis.insert(rows[i]) and basis.dim == k - 1:
            break
    return basis.dim


def _first_deficient(p: int, m: int, rows: tuple, k: int, start: int, stop: int):
    """Worker: first projective index in [start, stop) with dim V(y,D) < k-1, as (index, dim)."""
    from mincodes.services.field_service import FieldService

    spec = FieldService.make_field(p, m)
    columns = np.asarray(rows, dtype=np.int64).reshape(len(rows), k)
    points = LinalgService.projective_array(k, spec)[start:stop]
    for lo, hi in chunks(len(points)):
        zero = spec.dot(points[lo:hi], columns) == 0
        for r in range(hi - lo):
            dim = _span_dim(rows, np.flatnonzero(zero[r]), spec, k)
            if dim < k - 1:
                return start + lo + r, dim
    return None


def _first_covered(p: int, m: int, rows: tuple, k: int, start: int, stop: int):
    """Worker: first (y index, x index) with y in [start, stop), x != y and c(x) covered by c(y)."""
    from mincodes.services.field_service import FieldService

    spec = FieldService.make_field(p, m)
    columns = np.asarray(rows, dtype=np.int64).reshape(len(rows), k)
    zero = spec.dot(LinalgService.projective_array(k, spec), columns) == 0
    for j in range(start, stop):
        covered = zero[:, zero[j]].all(axis=1)
        covered[j] = False
        hits = np.flatnonzero(covered)
        if hits.size:
            return j, int(hits[0])
    return None


def _vector(row, spec) -> Vector:
    return Vector(tuple(int(c) for c in row), spec)


class MinimalityService:

    # ---------- Codeword level ----------
    @staticmethod
    def check_codeword_span(y: Vector, D: DefiningSet) -> tuple[bool, int]:
        """c(y) is minimal iff the columns of D inside H(y) span k-1 dimensions."""
        if y.is_zero():
            raise ZeroVectorError("Error: codeword test needs a nonzero message")
        members = CodeService.hyperplane_members(y, D)
        dim = _span_dim(D.as_rows(), members, D.field, D.k)
        return dim == D.k - 1, dim

    @staticmethod
    def hyperplane_span(y: Vector, D: DefiningSet) -> Subspace:
        """V(y,D): the span of the columns of D that lie in H(y)."""
        if y.is_zero():
            raise ZeroVectorError()
        members = CodeService.hyperplane_members(y, D)
        return LinalgService.span([D.columns[i] for i in members], D.k, D.field)

    @staticmethod
    def check_codeword_hyperplane(y: Vector, D: DefiningSet) -> bool:
        """The same criterion as an equality of canonical subspaces: V(y,D) = H(y)."""
        return MinimalityService.hyperplane_span(y, D) == LinalgService.hyperplane(y)

    @staticmethod
    def covering_witness(y: Vector, D: DefiningSet) -> Vector | None:
        """
        For a deficient y, a projective x independent of y with c(x) covered by c(y).

        x is taken from V(y,D)^perp, which has dimension >= 2 and contains y;
        any x there vanishes on every column where y vanishes. Returns None when
        c(y) is minimal.
        """
        V = MinimalityService.hyperplane_span(y, D)
        if V.dim == D.k - 1:
            return None
        for b in LinalgService.perp(V).basis:
            if LinalgService.is_independent(y, b):
                return b.normalized()
        return None  # pragma: no cover

    @staticmethod
    def check_codeword_brute(y: Vector, D: DefiningSet) -> bool:
        """Direct test: no independent x has c(x) covered by c(y)."""
        if y.is_zero():
            raise ZeroVectorError()
        if D.k != y.k:
            raise DimensionMismatchError()
        spec = D.field
        yn = y.normalized()
        points = LinalgService.projective_array(D.k, spec)
        zero = CodeService.codeword_matrix(points, D) == 0
        y_zero = CodeService.codeword_matrix(yn.as_array(), D)[0] == 0
        covered = zero[:, y_zero].all(axis=1)
        covered &= ~(points == np.asarray(yn.coords)).all(axis=1)
        return not bool(covered.any())

    @staticmethod
    def dhz_pair(a: Vector, b: Vector, D: DefiningSet) -> tuple[int, int]:
        """Both sides of the weight identity for messages a, b: sum_c wt(c(a) + c c(b)) and (q-1)wt(a) - wt(b)."""
        spec = D.field
        ca = CodeService.codeword_matrix(a.as_array(), D)[0]
        cb = CodeService.codeword_matrix(b.as_array(), D)[0]
        lhs = sum(int(np.count_nonzero(spec.add_arrays(ca, spec.mul_arrays(c, cb)))) for c in spec.nonzero())
        rhs = (spec.q - 1) * int(np.count_nonzero(ca)) - int(np.count_nonzero(cb))
        return lhs, rhs

    # ---------- Code level ----------
    @staticmethod
    def _pair_budget(D: DefiningSet) -> None:
        total = D.q ** D.k
        if total > PAIR_ENUMERATION_LIMIT:
            raise EnumerationTooLargeError(
                f"Error: q^k = {total} exceeds the pair enumeration limit {PAIR_ENUMERATION_LIMIT}"
            )

    @staticmethod
    @timed
    def check_span(D: DefiningSet, jobs: int = 1) -> MinimalityVerdict:
        """Minimal iff dim V(y,D) = k-1 for every projective y."""
        CodeService.validate_code(D)
        spec, k = D.field, D.k
        total = (spec.q ** k - 1) // (spec.q - 1)
        rows = tuple(D.as_rows())
        tasks = [(spec.p, spec.m, rows, k, lo, hi) for lo, hi in split_range(total, jobs)]
        failures = [r for r in run_tasks(_first_deficient, tasks, jobs) if r is not None]
        if not failures:
            verdict = MinimalityVerdict(True, Method.SPAN, None, {"hyperplanes": total})
        else:
            index, dim = min(failures)
            y = _vector(LinalgService.projective_array(k, spec)[index], spec)
            logger.debug("hyperplane of y=%s is deficient: dim V = %d < %d", y.coords, dim, k - 1)
            witness = HyperplaneWitness(y, dim, MinimalityService.covering_witness(y, D))
            verdict = MinimalityVerdict(False, Method.SPAN, witness, {"hyperplanes": index + 1})
        logger.info("span: %s after %d hyperplanes", verdict.verdict, verdict.work["hyperplanes"])
        return verdict

    @staticmethod
    @timed
    def check_brute(D: DefiningSet, jobs: int = 1) -> MinimalityVerdict:
        """Oracle: look for independent x, y with c(x) covered by c(y)."""
        CodeService.validate_code(D)
        MinimalityService._pair_budget(D)
        spec, k = D.field, D.k
        total = (spec.q ** k - 1) // (spec.q - 1)
        rows = tuple(D.as_rows())
        tasks = [(spec.p, spec.m, rows, k, lo, hi) for lo, hi in split_range(total, jobs)]
        failures = [r for r in run_tasks(_first_covered, tasks, jobs) if r is not None]
        if not failures:
            verdict = MinimalityVerdict(True, Method.BRUTE, None, {"pairs": total * (total - 1)})
        else:
            j, i = min(failures)
            points = LinalgService.projective_array(k, spec)
            pairs = j * (total - 1) + (i + 1 if i < j else i)
            witness = PairWitness(_vector(points[i], spec), _vector(points[j], spec))
            verdict = MinimalityVerdict(False, Method.BRUTE, witness, {"pairs": pairs})
        logger.info("brute: %s after %d pairs", verdict.verdict, verdict.work["pairs"])
        return verdict

    @staticmethod
    @timed
    def check_dhz(D: DefiningSet) -> MinimalityVerdict:
        """
        Minimal iff sum_{c != 0} wt(a + c b) != (q-1)wt(a) - wt(b) for all
        independent codewords a, b. Ordered pairs are tested since the
        identity is not symmetric in a and b.
        """
        CodeService.validate_code(D)
        MinimalityService._pair_budget(D)
        spec = D.field
        points = LinalgService.projective_array(D.k, spec)
        cw = CodeService.codeword_matrix(points, D)
        weights = np.count_nonzero(cw, axis=1)
        total = len(points)
        for i in range(total):
            lhs = np.zeros(total, dtype=np.int64)
            for c in spec.nonzero():
                lhs += np.count_nonzero(spec.add_arrays(cw[i][None, :], spec.mul_arrays(c, cw)), axis=1)
            rhs = (spec.q - 1) * weights[i] - weights
            violated = lhs == rhs
            violated[i] = False
            hits = np.flatnonzero(violated)
            if hits.size:
                j = int(hits[0])
                witness = PairWitness(_vector(points[j], spec), _vector(points[i], spec), int(lhs[j]), int(rhs[j]))
                pairs = i * (total - 1) + (j + 1 if j < i else j)
                logger.info("dhz: not_minimal after %d pairs", pairs)
                return MinimalityVerdict(False, Method.DHZ, witness, {"pairs": pairs})
        logger.info("dhz: minimal after %d pairs", total * (total - 1))
        return MinimalityVerdict(True, Method.DHZ, None, {"pairs": total * (total - 1)})

    @staticmethod
    @timed
    def check_ab(D: DefiningSet, jobs: int = 1) -> MinimalityVerdict:
        """Sufficient test q w_min > (q-1) w_max; never answers not-minimal."""
        CodeService.validate_code(D)
        dist = CodeService.weight_distribution(D, jobs=jobs)
        q = D.q
        minimal = True if q * dist.w_min > (q - 1) * dist.w_max else INCONCLUSIVE
        work = {"messages": dist.total, "w_min": dist.w_min, "w_max": dist.w_max}
        logger.info("ab: %s (w_min=%d, w_max=%d)", minimal, dist.w_min, dist.w_max)
        return MinimalityVerdict(minimal, Method.AB, None, work)

    @staticmethod
    def check(D: DefiningSet, method: str = Method.SPAN, jobs: int = 1) -> MinimalityVerdict:
        if method == Method.SPAN:
            return MinimalityService.check_span(D, jobs=jobs)
        if method == Method.BRUTE:
            return MinimalityService.check_brute(D, jobs=jobs)
        if method == Method.DHZ:
            return MinimalityService.check_dhz(D)
        return MinimalityService.check_ab(D, jobs=jobs)

    @staticmethod
    def check_all(D: DefiningSet, jobs: int = 1) -> tuple[MinimalityVerdict, ...]:
        """Run all four checkers and insist the exact ones agree and AB stays sound."""
        span = MinimalityService.check_span(D, jobs=jobs)
        dhz = MinimalityService.check_dhz(D)
        brute = MinimalityService.check_brute(D, jobs=jobs)
        ab = MinimalityService.check_ab(D, jobs=jobs)
        if not (span.minimal == dhz.minimal == brute.minimal):
            raise CheckerDisagreementError(
                f"Error: checkers disagree (span={span.verdict}, dhz={dhz.verdict}, brute={brute.verdict})"
            )
        if ab.minimal is True and span.minimal is not True:
            raise CheckerDisagreementError("Error: ab reports minimal but span does not")
        return span, dhz, brute, ab

    @staticmethod
    def counting_identity(D: DefiningSet) -> tuple[int, int]:
        """
        Count pairs (y, d) with y != 0, d in D and <y, d> = 0 two ways:
        over y as sum #H(y,D), over d as n(q^{k-1} - 1).
        """
        if D.zero_columns():
            raise ZeroColumnPresentError()
        spec, k, n = D.field, D.k, D.n
        points = LinalgService.projective_array(k, spec)
        projective_sum = 0
        for lo, hi in chunks(len(points)):
            projective_sum += int((CodeService.codeword_matrix(points[lo:hi], D) == 0).sum())
        lhs = (spec.q - 1) * projective_sum
        rhs = n * (spec.q ** (k - 1) - 1)
        return lhs, rhs
