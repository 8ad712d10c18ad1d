from __future__ import annotations

import logging
from itertools import product

from mincodes.exceptions import (
    BadSplitError,
    ConstructionError,
    DimensionMismatchError,
    EnumerationTooLargeError,
    FieldMismatchError,
    InvalidParameterError,
    TargetTooSmallError,
    ZeroVectorError,
)
from mincodes.models.code import DefiningSet
from mincodes.models.construction import ConstructionParams
from mincodes.models.field import FieldSpec
from mincodes.models.vector import Vector
from mincodes.services.common import message_matrix
from mincodes.services.linalg_service import LinalgService
from mincodes.utils.constants import FULL_SPACE_LIMIT, Family, Padding

logger = logging.getLogger("mincodes.constructions")

FAMILY_COMPONENTS = {
    Family.D1: ("S", "S'", "Omega2"),
    Family.D2: ("S", "S''", "Omega3"),
    Family.D3: ("S", "S'", "Omega1", "Omega2"),
    Family.D4: ("S", "S'", "Omega1", "Omega3"),
}


def _span_minus_zero(positions: range, k: int, spec: FieldSpec) -> list[Vector]:
    """Nonzero vectors supported on `positions` (a contiguous range), lexicographic."""
    out = []
    for tail in product(range(spec.q), repeat=len(positions)):
        if any(tail):
            coords = [0] * k
            for pos, c in zip(positions, tail):
                coords[pos] = c
            out.append(Vector(tuple(coords), spec))
    return out


def _translates(indices: range, base: list[Vector], k: int, spec: FieldSpec) -> list[Vector]:
    """Union of e_i + base over i in `indices`, sorted lexicographically."""
    out = {(Vector.unit(i, k, spec) + s) for i in indices for s in base}
    return sorted(out, key=lambda v: v.coords)


def _dedupe(vectors) -> list[Vector]:
    seen, out = set(), []
    for v in vectors:
        if v.coords not in seen:
            seen.add(v.coords)
            out.append(v)
    return out


class ConstructionService:
    """Named defining sets: full space, D0 and its witness basis, the split families, padding."""

    @staticmethod
    def full_space(k: int, spec: FieldSpec) -> DefiningSet:
        """Every vector of F_q^k, zero included, in lexicographic order."""
        if k < 1:
            raise InvalidParameterError("Error: dimension k must be >= 1")
        total = spec.q ** k
        if total > FULL_SPACE_LIMIT:
            raise EnumerationTooLargeError(f"Error: q^k = {total} exceeds the full-space limit {FULL_SPACE_LIMIT}")
        return DefiningSet.from_rows(message_matrix(k, spec).tolist(), spec, k)

    @staticmethod
    def d0_columns(k: int, spec: FieldSpec) -> list[Vector]:
        units = [Vector.unit(i, k, spec) for i in range(k)]
        pairs = [
            units[i] + units[j].scale(a)
            for i in range(k)
            for j in range(i + 1, k)
            for a in spec.nonzero()
        ]
        return units + pairs

    @staticmethod
    def d0(k: int, spec: FieldSpec) -> DefiningSet:
        """
        D0 = {e_i} followed by {e_i + a e_j : i < j, a != 0}, ordered by i, j, a.
        n = (q-1)k(k-1)/2 + k.
        """
        if k < 1:
            raise InvalidParameterError("Error: dimension k must be >= 1")
        return DefiningSet(tuple(ConstructionService.d0_columns(k, spec)), spec, k)

    @staticmethod
    def d0_witness(y: Vector, k: int, spec: FieldSpec) -> list[Vector]:
        """
        k-1 independent columns of D0 orthogonal to y.

        With i0 the first nonzero position of y: e_i for i < i0 and for i > i0
        with y_i = 0; e_i0 - y_i^-1 y_i0 e_i for i > i0 with y_i != 0. Membership
        in D0, orthogonality and independence are all checked.
        """
        if y.is_zero():
            raise ZeroVectorError("Error: D0 witness basis needs a nonzero y")
        if y.k != k or y.field != spec:
            raise DimensionMismatchError()
        i0 = y.leading_index()
        e = [Vector.unit(i, k, spec) for i in range(k)]
        alphas = []
        for i in range(k):
            if i == i0:
                continue
            if i < i0:
                a = spec.neg(spec.mul(spec.inv(y[i0]), y[i]))
                alphas.append(e[i] + e[i0].scale(a))
            elif y[i]:
                a = spec.neg(spec.mul(spec.inv(y[i]), y[i0]))
                alphas.append(e[i0] + e[i].scale(a))
            else:
                alphas.append(e[i])

        members = {v.coords for v in ConstructionService.d0_columns(k, spec)}
        for a in alphas:
            if a.coords not in members:
                raise ConstructionError(f"Error: witness vector {a.coords} is not a column of D0")
            if LinalgService.inner_product(a, y).value != 0:
                raise ConstructionError(f"Error: witness vector {a.coords} is not orthogonal to y")
        if alphas and LinalgService.rank(alphas) != k - 1:
            raise ConstructionError("Error: witness vectors are dependent")
        return alphas

    @staticmethod
    def weight_two_set(k: int, spec: FieldSpec) -> DefiningSet:
        """All nonzero vectors of weight at most 2, lexicographic; the superset D0 is cut from."""
        if k < 1:
            raise InvalidParameterError("Error: dimension k must be >= 1")
        columns = []
        for coords in product(range(spec.q), repeat=k):
            weight = sum(1 for c in coords if c)
            if 1 <= weight <= 2:
                columns.append(Vector(coords, spec))
        return DefiningSet(tuple(columns), spec, k)

    @staticmethod
    def family_sets(k: int, t: int, spec: FieldSpec) -> tuple[list[Vector], ...]:
        """
        (S, S', S'', Omega1, Omega2, Omega3) for k/2 < t < k, positions 0-based:
        S spans positions 0..t-1, S' positions k-t..k-1, S'' positions k-t+1..k-1;
        Omega1 = e_i + S for i >= t, Omega2 = e_i + S' for i < k-t,
        Omega3 = e_i + S'' for i <= k-t.
        """
        if not (2 * t > k and t < k):
            raise BadSplitError(f"Error: split parameter t={t} must satisfy k/2 < t < k (k={k})")
        S = _span_minus_zero(range(0, t), k, spec)
        S1 = _span_minus_zero(range(k - t, k), k, spec)
        S2 = _span_minus_zero(range(k - t + 1, k), k, spec)
        omega1 = _translates(range(t, k), S, k, spec)
        omega2 = _translates(range(0, k - t), S1, k, spec)
        omega3 = _translates(range(0, k - t + 1), S2, k, spec)
        return S, S1, S2, omega1, omega2, omega3

    @staticmethod
    def family_components(family: str, k: int, t: int, spec: FieldSpec) -> dict[str, list[Vector]]:
        S, S1, S2, o1, o2, o3 = ConstructionService.family_sets(k, t, spec)
        named = {"S": S, "S'": S1, "S''": S2, "Omega1": o1, "Omega2": o2, "Omega3": o3}
        return {name: named[name] for name in FAMILY_COMPONENTS[family]}

    @staticmethod
    def d_family(family: int | str, k: int, t: int, spec: FieldSpec) -> DefiningSet:
        """D1..D4 as set unions: a vector shared by two components appears once, at its first position."""
        name = family if isinstance(family, str) else f"d{family}"
        if name not in FAMILY_COMPONENTS:
            raise InvalidParameterError(f"Error: unknown split family '{family}'")
        components = ConstructionService.family_components(name, k, t, spec)
        columns = _dedupe(v for part in components.values() for v in part)
        return DefiningSet(tuple(columns), spec, k)

    @staticmethod
    def extend(D: DefiningSet, target_n: int, padding: str = Padding.REPEAT_LAST,
               source: DefiningSet | None = None) -> DefiningSet:
        """Append target_n - n columns; a minimal code stays minimal under any padding."""
        if target_n < D.n:
            raise TargetTooSmallError(f"Error: target length {target_n} is smaller than n={D.n}")
        missing = target_n - D.n
        if padding == Padding.REPEAT_LAST:
            extra = [D.columns[-1]] * missing
        elif padding == Padding.CYCLE:
            extra = [D.columns[i % D.n] for i in range(missing)]
        elif padding == Padding.FROM_FILE:
            if source is None or source.n == 0:
                raise InvalidParameterError("Error: from_file padding needs a source defining set")
            if source.field != D.field:
                raise FieldMismatchError()
            if source.k != D.k:
                raise DimensionMismatchError(f"Error: padding columns have k={source.k}, expected {D.k}")
            extra = [source.columns[i % source.n] for i in range(missing)]
        else:
            raise InvalidParameterError(f"Error: unknown padding '{padding}'")
        if missing:
            logger.info("extended n=%d to n=%d with %s padding", D.n, target_n, padding)
        return D.with_columns(extra)

    @staticmethod
    def build(params: ConstructionParams) -> DefiningSet:
        spec, k = params.field, params.k
        if params.family == Family.FULL:
            D = ConstructionService.full_space(k, spec)
        elif params.family == Family.D0:
            D = ConstructionService.d0(k, spec)
        elif params.family == Family.WT2:
            D = ConstructionService.weight_two_set(k, spec)
        else:
            D = ConstructionService.d_family(params.family, k, params.t, spec)
        logger.info("built %s k=%d q=%d n=%d", params.family, k, spec.q, D.n)
        return D

    @staticmethod
    def manifest(params: ConstructionParams, D: DefiningSet) -> dict:
        """Header facts written by `construct --manifest`."""
        info = {"family": params.family, "k": params.k, "t": params.t, "q": params.field.label, "n": D.n}
        if params.family in FAMILY_COMPONENTS:
            parts = ConstructionService.family_components(params.family, params.k, params.t, params.field)
            info["components"] = {name: len(vs) for name, vs in parts.items()}
        return info
