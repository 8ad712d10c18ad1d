"""
Exact linear algebra over GF(q): Gaussian elimination, canonical subspaces,
orthogonal complements and projective point enumeration.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

import numpy as np

from mincodes.exceptions import DimensionMismatchError, FieldMismatchError, ZeroVectorError
from mincodes.models.field import FieldElement, FieldSpec
from mincodes.models.vector import Subspace, Vector


def _uniform(vs: list[Vector]) -> tuple[FieldSpec, int]:
    if not vs:
        raise DimensionMismatchError("Error: need at least one vector")
    spec, k = vs[0].field, vs[0].k
    for v in vs[1:]:
        if v.field != spec:
            raise FieldMismatchError()
        if v.k != k:
            raise DimensionMismatchError(f"Error: vectors of length {k} and {v.k}")
    return spec, k


def rref_rows(rows: list[list[int]], spec: FieldSpec, k: int) -> list[list[int]]:
    """Reduced row-echelon form of `rows` (zero rows dropped)."""
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(k):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col]:
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        piv = rows[pivot_row]
        inv = spec.inv(piv[col])
        if inv != 1:
            piv = [spec.mul(inv, c) for c in piv]
            rows[pivot_row] = piv
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                c = rows[r][col]
                rows[r] = [spec.sub(a, spec.mul(c, b)) for a, b in zip(rows[r], piv)]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows[:pivot_row]


class EchelonBasis:
    """
    A growing basis kept in semi-echelon form: each row has a pivot equal to
    1 and is zero at the pivots of the rows inserted before it. Supports
    undo of the last successful insert, which the search uses to backtrack.
    """

    __slots__ = ("spec", "k", "rows", "pivots")

    def __init__(self, spec: FieldSpec, k: int):
        self.spec = spec
        self.k = k
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, coords) -> list[int]:
        f = self.spec
        v = list(coords)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                for j in range(self.k):
                    if row[j]:
                        v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def insert(self, coords) -> bool:
        """Fold one vector in; return True when it raised the dimension."""
        v = self.reduce(coords)
        for piv, c in enumerate(v):
            if c:
                if c != 1:
                    inv = self.spec.inv(c)
                    v = [self.spec.mul(inv, x) for x in v]
                self.rows.append(v)
                self.pivots.append(piv)
                return True
        return False

    def pop(self) -> None:
        self.rows.pop()
        self.pivots.pop()


class SpanTable:
    """
    Subspaces spanned by projective points, numbered on first sight.

    Id 0 is the zero subspace. `join(s, c)` is the id of span(s, point c) and
    is computed once per pair, so the search can track spans by table lookup.
    """

    __slots__ = ("spec", "k", "points", "dims", "_bases", "_ids", "_joins")

    def __init__(self, spec: FieldSpec, k: int, points: list[tuple[int, ...]]):
        self.spec = spec
        self.k = k
        self.points = points
        self.dims: list[int] = [0]
        self._bases: list[list[list[int]]] = [[]]
        self._ids: dict[tuple, int] = {(): 0}
        self._joins: list[dict[int, int]] = [{}]

    def __len__(self) -> int:
        return len(self.dims)

    def join(self, s: int, c: int) -> int:
        t = self._joins[s].get(c)
        if t is None:
            rows = rref_rows(self._bases[s] + [list(self.points[c])], self.spec, self.k)
            key = tuple(tuple(r) for r in rows)
            t = self._ids.get(key)
            if t is None:
                t = len(self.dims)
                self._ids[key] = t
                self._bases.append(rows)
                self.dims.append(len(rows))
                self._joins.append({})
            self._joins[s][c] = t
        return t


class LinalgService:

    @staticmethod
    def inner_product(x: Vector, y: Vector) -> FieldElement:
        if x.field != y.field:
            raise FieldMismatchError()
        if x.k != y.k:
            raise DimensionMismatchError(f"Error: inner product of lengths {x.k} and {y.k}")
        f = x.field
        acc = 0
        for a, b in zip(x.coords, y.coords):
            if a and b:
                acc = f.add(acc, f.mul(a, b))
        return FieldElement(acc, f)

    @staticmethod
    def rank(vs: Iterable[Vector]) -> int:
        vs = list(vs)
        spec, k = _uniform(vs)
        basis = EchelonBasis(spec, k)
        for v in vs:
            basis.insert(v.coords)
            if basis.dim == k:
                break
        return basis.dim

    @staticmethod
    def span(vs: Iterable[Vector], k: int | None = None, spec: FieldSpec | None = None) -> Subspace:
        """
        Canonical span of `vs`. An empty input gives the zero subspace, for
        which `k` and `spec` must be passed.
        """
        vs = list(vs)
        if not vs:
            if k is None or spec is None:
                raise DimensionMismatchError("Error: span of nothing needs k and field")
            return Subspace((), k, spec)
        spec, k = _uniform(vs)
        rows = rref_rows([v.coords for v in vs], spec, k)
        return Subspace(tuple(Vector(tuple(r), spec) for r in rows), k, spec)

    @staticmethod
    def perp(s: Subspace) -> Subspace:
        """All y with <y, x> = 0 for every x in s; dimension k - dim s."""
        f, k = s.field, s.ambient_dim
        pivots = s.pivots
        free = [j for j in range(k) if j not in pivots]
        vectors = []
        for fc in free:
            coords = [0] * k
            coords[fc] = 1
            for row, piv in zip(s.basis, pivots):
                coords[piv] = f.neg(row.coords[fc])
            vectors.append(Vector(tuple(coords), f))
        return LinalgService.span(vectors, k, f)

    @staticmethod
    def hyperplane(y: Vector) -> Subspace:
        """H(y) = y^perp."""
        if y.is_zero():
            raise ZeroVectorError("Error: the hyperplane of the zero vector is undefined")
        return LinalgService.perp(LinalgService.span([y]))

    @staticmethod
    def projective_points(k: int, spec: FieldSpec) -> Iterator[Vector]:
        """
        One representative per scalar class of nonzero vectors, first nonzero
        coordinate 1, in lexicographic order.
        """
        for lead in range(k - 1, -1, -1):
            prefix = (0,) * lead + (1,)
            for tail in product(range(spec.q), repeat=k - 1 - lead):
                yield Vector(prefix + tail, spec)

    @staticmethod
    def projective_array(k: int, spec: FieldSpec) -> np.ndarray:
        """projective_points as a P x k array of encodings, same order."""
        pts = [v.coords for v in LinalgService.projective_points(k, spec)]
        return np.asarray(pts, dtype=np.int64).reshape(len(pts), k)

    @staticmethod
    def projective_index(vs: np.ndarray, spec: FieldSpec) -> np.ndarray:
        """Positions in projective_points of the scalar classes of the nonzero rows of `vs`."""
        vs = np.atleast_2d(np.asarray(vs, dtype=np.int64))
        k = vs.shape[1]
        if (vs == 0).all(axis=1).any():
            raise ZeroVectorError("Error: the zero vector has no projective point")
        lead = (vs != 0).argmax(axis=1)
        inverses = np.array([0] + [spec.inv(a) for a in range(1, spec.q)], dtype=np.int64)
        scale = inverses[vs[np.arange(len(vs)), lead]]
        normal = spec.mul_arrays(vs, scale[:, None])
        # points with lead position i occupy one block, blocks ordered by descending i
        offsets = np.zeros(k, dtype=np.int64)
        for i in range(k - 2, -1, -1):
            offsets[i] = offsets[i + 1] + spec.q ** (k - 2 - i)
        tail = np.zeros(len(vs), dtype=np.int64)
        for j in range(k):
            inside = j > lead
            tail = np.where(inside, tail * spec.q + normal[:, j], tail)
        return offsets[lead] + tail

    @staticmethod
    def monomial_orbit_minima(k: int, spec: FieldSpec) -> np.ndarray:
        """
        For every projective point, the least index in its orbit under
        coordinate permutations and scalings of single coordinates. These
        maps permute the unit vectors up to scalars.
        """
        points = LinalgService.projective_array(k, spec)
        count = len(points)
        images = []
        for i in range(1, k):
            perm = list(range(k))
            perm[0], perm[i] = i, 0
            images.append(LinalgService.projective_index(points[:, perm], spec))
        for a in range(2, spec.q):
            scaled = points.copy()
            scaled[:, 0] = spec.mul_arrays(points[:, 0], a)
            images.append(LinalgService.projective_index(scaled, spec))
        label = np.arange(count, dtype=np.int64)
        while True:
            before = label.copy()
            for img in images:
                label = np.minimum(label, label[img])
                label[img] = np.minimum(label[img], label)
            if np.array_equal(label, before):
                return label

    @staticmethod
    def is_independent(x: Vector, y: Vector) -> bool:
        return LinalgService.rank([x, y]) == 2
