"""
Unit tests for LinalgService, EchelonBasis and SpanTable: inner products,
rank, canonical spans, orthogonal complements, hyperplanes, the projective
point order every checker relies on and the orbit labels the search uses.
"""

import itertools
import random

import pytest

from mincodes.exceptions import DimensionMismatchError, FieldMismatchError, ZeroVectorError
from mincodes.models.vector import Vector
from mincodes.services.common import projective_count
from mincodes.services.field_service import FieldService
from mincodes.services.linalg_service import EchelonBasis, LinalgService, SpanTable


def V(coords, spec):
    return Vector(tuple(coords), spec)


def test_inner_product(gf3):
    assert LinalgService.inner_product(V((1, 2, 0), gf3), V((2, 2, 1), gf3)).value == 0
    assert LinalgService.inner_product(V((1, 1, 1), gf3), V((1, 0, 2), gf3)).value == 0
    assert LinalgService.inner_product(V((1, 1, 0), gf3), V((1, 0, 2), gf3)).value == 1


def test_inner_product_rejects_mismatches(gf2, gf3):
    with pytest.raises(DimensionMismatchError):
        LinalgService.inner_product(V((1, 0), gf2), V((1, 0, 1), gf2))
    with pytest.raises(FieldMismatchError):
        LinalgService.inner_product(V((1, 0), gf2), V((1, 0), gf3))


def test_rank(gf2, gf3):
    assert LinalgService.rank([V((1, 0, 1), gf2), V((0, 1, 1), gf2), V((1, 1, 0), gf2)]) == 2
    assert LinalgService.rank([V((1, 0, 1), gf3), V((0, 1, 1), gf3), V((1, 1, 0), gf3)]) == 3
    assert LinalgService.rank([V((0, 0), gf3), V((0, 0), gf3)]) == 0


def test_span_is_reduced_row_echelon(gf2):
    s = LinalgService.span([V((1, 1, 0), gf2), V((0, 1, 1), gf2), V((1, 0, 1), gf2)])
    assert [b.coords for b in s.basis] == [(1, 0, 1), (0, 1, 1)]
    assert s.pivots == (0, 1)
    assert V((1, 1, 0), gf2) in s
    assert V((1, 0, 0), gf2) not in s


def test_span_is_canonical(gf3):
    a = LinalgService.span([V((1, 2, 0), gf3), V((0, 1, 1), gf3)])
    b = LinalgService.span([V((2, 1, 0), gf3), V((1, 0, 1), gf3)])
    assert a == b


def test_empty_span_needs_shape(gf2):
    zero = LinalgService.span([], 3, gf2)
    assert zero.dim == 0
    assert LinalgService.perp(zero).is_full()
    with pytest.raises(DimensionMismatchError):
        LinalgService.span([])


def test_perp_example(gf2):
    s = LinalgService.span([V((1, 1, 0), gf2), V((0, 1, 1), gf2)])
    assert [b.coords for b in LinalgService.perp(s).basis] == [(1, 1, 1)]


def test_hyperplane_example(gf3):
    h = LinalgService.hyperplane(V((1, 1), gf3))
    assert [b.coords for b in h.basis] == [(1, 2)]


def test_hyperplane_of_zero_raises(gf3):
    with pytest.raises(ZeroVectorError):
        LinalgService.hyperplane(V((0, 0, 0), gf3))


def test_projective_points_order(gf3):
    pts = [v.coords for v in LinalgService.projective_points(2, gf3)]
    assert pts == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert LinalgService.projective_array(2, gf3).tolist() == [list(p) for p in pts]


@pytest.mark.parametrize("q", (2, 3, 4, 5))
@pytest.mark.parametrize("k", (1, 2, 3))
def test_projective_points_cover_each_class_once(q, k):
    spec = FieldService.field_of_order(q)
    pts = list(LinalgService.projective_points(k, spec))
    assert len(pts) == projective_count(k, q)
    classes = set()
    for coords in itertools.product(range(q), repeat=k):
        if any(coords):
            classes.add(V(coords, spec).normalized().coords)
    assert classes == {p.coords for p in pts}
    assert all(p[p.leading_index()] == 1 for p in pts)


@pytest.mark.parametrize("q", (2, 3, 4))
@pytest.mark.parametrize("k", (1, 2, 3, 4))
def test_hyperplanes_exhaustive(q, k):
    spec = FieldService.field_of_order(q)
    for y in LinalgService.projective_points(k, spec):
        h = LinalgService.hyperplane(y)
        assert h.dim == k - 1
        assert all(LinalgService.inner_product(b, y).value == 0 for b in h.basis)
        assert h == LinalgService.perp(LinalgService.span([y]))
        assert h == LinalgService.hyperplane(y.scale(q - 1))


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_perp_is_an_involution_on_random_subspaces(q):
    spec = FieldService.field_of_order(q)
    rng = random.Random(q)
    for _ in range(40):
        k = rng.randint(1, 5)
        vs = [V([rng.randrange(q) for _ in range(k)], spec) for _ in range(rng.randint(1, 4))]
        s = LinalgService.span(vs)
        p = LinalgService.perp(s)
        assert s.dim + p.dim == k
        assert LinalgService.perp(p) == s
        assert LinalgService.span(list(s.basis), k, spec) == s
        for a in s.basis:
            for b in p.basis:
                assert LinalgService.inner_product(a, b).value == 0


def test_rank_ignores_duplicates(gf3):
    vs = [V((1, 2, 0), gf3), V((0, 1, 1), gf3)]
    assert LinalgService.rank(vs + vs + [vs[0].scale(2)]) == LinalgService.rank(vs) == 2


def test_is_independent(gf3):
    assert not LinalgService.is_independent(V((1, 2), gf3), V((2, 1), gf3))
    assert LinalgService.is_independent(V((1, 2), gf3), V((1, 1), gf3))


def test_subspace_inclusion(gf2):
    line = LinalgService.span([V((1, 1, 0), gf2)])
    plane = LinalgService.span([V((1, 0, 0), gf2), V((0, 1, 0), gf2)])
    assert line.is_subspace_of(plane)
    assert not plane.is_subspace_of(line)


def test_echelon_basis_insert_and_undo(gf3):
    basis = EchelonBasis(gf3, 3)
    assert basis.insert((0, 2, 1))
    assert basis.insert((1, 1, 0))
    assert not basis.insert((1, 0, 1))  # (0,2,1) + (1,1,0)
    assert basis.dim == 2
    assert basis.insert((0, 0, 1))
    assert basis.dim == 3
    basis.pop()
    assert basis.dim == 2
    assert basis.rows == [[0, 1, 2], [1, 0, 1]]
    assert not any(basis.reduce((2, 0, 2)))


@pytest.mark.parametrize("q, k", [(2, 1), (2, 4), (3, 3), (4, 2)])
def test_projective_index_inverts_the_point_order(q, k):
    spec = FieldService.field_of_order(q)
    points = LinalgService.projective_array(k, spec)
    assert LinalgService.projective_index(points, spec).tolist() == list(range(len(points)))


def test_projective_index_normalises_scalars(gf3):
    assert LinalgService.projective_index([[2, 2, 0], [0, 0, 2], [1, 1, 0]], gf3).tolist() == [7, 0, 7]
    with pytest.raises(ZeroVectorError):
        LinalgService.projective_index([[0, 1, 0], [0, 0, 0]], gf3)


def test_monomial_orbit_minima(gf2, gf3):
    assert LinalgService.monomial_orbit_minima(3, gf2).tolist() == [0, 0, 2, 0, 2, 2, 6]
    assert LinalgService.monomial_orbit_minima(2, gf3).tolist() == [0, 0, 2, 2]
    minima = LinalgService.monomial_orbit_minima(3, gf3).tolist()
    assert sorted(set(minima)) == [0, 2, 8]
    # orbits follow the number of nonzero coordinates
    for point, label in zip(LinalgService.projective_points(3, gf3), minima):
        assert label == {1: 0, 2: 2, 3: 8}[sum(1 for c in point if c)]


def test_span_table_numbers_subspaces_canonically(gf3):
    rows = [tuple(int(c) for c in r) for r in LinalgService.projective_array(3, gf3)]
    table = SpanTable(gf3, 3, rows)
    assert table.dims[0] == 0
    line = table.join(0, 1)
    assert table.dims[line] == 1
    assert table.join(line, 1) == line
    plane = table.join(line, 4)
    assert table.dims[plane] == 2
    assert table.join(table.join(0, 4), 1) == plane
    assert table.join(plane, 7) == plane  # (1,1,0) lies in span(e1, e2)
    assert table.dims[table.join(plane, 0)] == 3
    assert len(table) == 5
