"""
Unit tests for ConstructionService: the full space, D0 with its explicit
witness basis, the weight-two superset, the split families D1-D4 and
padding by extension.
"""

from math import comb

import pytest

from mincodes.exceptions import (
    BadSplitError,
    DimensionMismatchError,
    EnumerationTooLargeError,
    FieldMismatchError,
    InvalidParameterError,
    TargetTooSmallError,
    ZeroVectorError,
)
from mincodes.models.construction import ConstructionParams
from mincodes.models.vector import Vector
from mincodes.services.construction_service import ConstructionService
from mincodes.services.field_service import FieldService
from mincodes.services.linalg_service import LinalgService
from mincodes.services.minimality_service import MinimalityService
from mincodes.utils.constants import Family, Padding


def coords(vectors):
    return [v.coords for v in vectors]


def splits(k):
    return [t for t in range(k // 2 + 1, k)]


def test_full_space_example(gf2):
    D = ConstructionService.full_space(2, gf2)
    assert D.as_rows() == [(0, 0), (0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("q, k", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_full_space_is_minimal(q, k):
    D = ConstructionService.full_space(k, FieldService.field_of_order(q))
    assert D.n == q ** k
    assert MinimalityService.check_span(D).minimal is True


def test_full_space_refuses_huge_spaces(gf2):
    with pytest.raises(EnumerationTooLargeError):
        ConstructionService.full_space(17, gf2)


def test_d0_examples(gf2, gf3):
    assert ConstructionService.d0(3, gf2).as_rows() == [
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1),
    ]
    assert ConstructionService.d0(2, gf3).as_rows() == [(1, 0), (0, 1), (1, 1), (1, 2)]


@pytest.mark.parametrize("q", (2, 3, 4, 5))
@pytest.mark.parametrize("k", (1, 2, 3, 4, 5, 6))
def test_d0_length_formula(q, k):
    D = ConstructionService.d0(k, FieldService.field_of_order(q))
    assert D.n == (q - 1) * k * (k - 1) // 2 + k
    assert len(set(D.as_rows())) == D.n


@pytest.mark.parametrize("q, k", [
    (2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5), (4, 3), (4, 4), (4, 5), (5, 2),
])
def test_d0_is_minimal(q, k):
    assert MinimalityService.check_span(ConstructionService.d0(k, FieldService.field_of_order(q))).minimal is True


def test_d0_witness_examples(gf2, gf3):
    assert coords(ConstructionService.d0_witness(Vector((1, 1, 0), gf2), 3, gf2)) == [(1, 1, 0), (0, 0, 1)]
    assert coords(ConstructionService.d0_witness(Vector((0, 1, 2), gf3), 3, gf3)) == [(1, 0, 0), (0, 1, 1)]


@pytest.mark.parametrize("q", (2, 3, 4))
@pytest.mark.parametrize("k", (1, 2, 3, 4))
def test_d0_witness_exhaustive(q, k):
    spec = FieldService.field_of_order(q)
    members = set(ConstructionService.d0(k, spec).as_rows())
    for y in LinalgService.projective_points(k, spec):
        basis = ConstructionService.d0_witness(y, k, spec)
        assert len(basis) == k - 1
        assert all(v.coords in members for v in basis)
        assert all(LinalgService.inner_product(v, y).value == 0 for v in basis)
        if basis:
            assert LinalgService.rank(basis) == k - 1


def test_d0_witness_needs_nonzero_y(gf3):
    with pytest.raises(ZeroVectorError):
        ConstructionService.d0_witness(Vector((0, 0), gf3), 2, gf3)
    with pytest.raises(DimensionMismatchError):
        ConstructionService.d0_witness(Vector((1, 0), gf3), 3, gf3)


@pytest.mark.parametrize("q", (2, 3, 4))
@pytest.mark.parametrize("k", (2, 3, 4))
def test_weight_two_set_contains_d0(q, k):
    spec = FieldService.field_of_order(q)
    D = ConstructionService.weight_two_set(k, spec)
    assert D.n == k * (q - 1) + comb(k, 2) * (q - 1) ** 2
    assert set(ConstructionService.d0(k, spec).as_rows()) <= set(D.as_rows())


def test_family_sets_example(gf2):
    S, S1, S2, o1, o2, o3 = ConstructionService.family_sets(3, 2, gf2)
    assert coords(S) == [(0, 1, 0), (1, 0, 0), (1, 1, 0)]
    assert coords(S1) == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]
    assert coords(S2) == [(0, 0, 1)]
    assert coords(o1) == [(0, 1, 1), (1, 0, 1), (1, 1, 1)]
    assert coords(o2) == [(1, 0, 1), (1, 1, 0), (1, 1, 1)]
    assert coords(o3) == [(0, 1, 1), (1, 0, 1)]


@pytest.mark.parametrize("q", (2, 3))
@pytest.mark.parametrize("k", (3, 4, 5))
def test_family_set_sizes(q, k):
    spec = FieldService.field_of_order(q)
    for t in splits(k):
        S, S1, S2, o1, o2, o3 = ConstructionService.family_sets(k, t, spec)
        assert len(S) == len(S1) == q ** t - 1
        assert len(S2) == q ** (t - 1) - 1
        assert len(o1) == len(o2) == (k - t) * (q ** t - 1)
        assert len(o3) == (k - t + 1) * (q ** (t - 1) - 1)


@pytest.mark.parametrize("k, t", [(3, 1), (3, 3), (4, 2), (2, 1)])
def test_bad_split_is_rejected(gf2, k, t):
    with pytest.raises(BadSplitError):
        ConstructionService.family_sets(k, t, gf2)
    with pytest.raises(BadSplitError):
        ConstructionParams(Family.D1, k, gf2, t)


@pytest.mark.parametrize("q", (2, 3))
@pytest.mark.parametrize("k", (3, 4, 5))
def test_family_inclusions(q, k):
    spec = FieldService.field_of_order(q)
    d0 = set(ConstructionService.d0(k, spec).as_rows())
    for t in splits(k):
        d = {f: set(ConstructionService.d_family(f, k, t, spec).as_rows()) for f in Family.SPLIT}
        assert d0 <= d[Family.D1] and d0 <= d[Family.D2]
        assert d[Family.D1] <= d[Family.D3]
        assert d[Family.D2] <= d[Family.D4]


@pytest.mark.parametrize("q", (2, 3))
@pytest.mark.parametrize("k", (3, 4, 5))
def test_families_are_minimal_and_duplicate_free(q, k):
    spec = FieldService.field_of_order(q)
    for t in splits(k):
        for family in Family.SPLIT:
            D = ConstructionService.d_family(family, k, t, spec)
            assert len(set(D.as_rows())) == D.n
            assert MinimalityService.check_span(D).minimal is True, (family, k, t, q)


def test_d_family_accepts_numbers(gf2):
    assert ConstructionService.d_family(3, 4, 3, gf2) == ConstructionService.d_family("d3", 4, 3, gf2)
    with pytest.raises(InvalidParameterError):
        ConstructionService.d_family(7, 4, 3, gf2)


def test_extend_paddings(gf2, make_set):
    D = make_set([(1, 0), (0, 1), (1, 1)], gf2)
    assert ConstructionService.extend(D, 5, Padding.REPEAT_LAST).as_rows()[3:] == [(1, 1), (1, 1)]
    assert ConstructionService.extend(D, 7, Padding.CYCLE).as_rows()[3:] == [(1, 0), (0, 1), (1, 1), (1, 0)]
    extra = make_set([(0, 1), (0, 0)], gf2)
    assert ConstructionService.extend(D, 6, Padding.FROM_FILE, extra).as_rows()[3:] == [(0, 1), (0, 0), (0, 1)]
    assert ConstructionService.extend(D, 3) == D


def test_extend_errors(gf2, gf3, make_set):
    D = make_set([(1, 0), (0, 1), (1, 1)], gf2)
    with pytest.raises(TargetTooSmallError):
        ConstructionService.extend(D, 2)
    with pytest.raises(FieldMismatchError):
        ConstructionService.extend(D, 5, Padding.FROM_FILE, make_set([(1, 0), (0, 1)], gf3))
    with pytest.raises(InvalidParameterError):
        ConstructionService.extend(D, 5, Padding.FROM_FILE)


@pytest.mark.parametrize("padding", Padding.CHOICES)
def test_extension_keeps_minimality(gf3, padding):
    D = ConstructionService.d0(3, gf3)
    source = ConstructionService.weight_two_set(3, gf3) if padding == Padding.FROM_FILE else None
    for target in (D.n, D.n + 1, D.n + 5):
        assert MinimalityService.check_span(ConstructionService.extend(D, target, padding, source)).minimal


def test_params_validation(gf2):
    with pytest.raises(InvalidParameterError):
        ConstructionParams("d9", 3, gf2)
    with pytest.raises(InvalidParameterError):
        ConstructionParams(Family.D0, 0, gf2)
    with pytest.raises(BadSplitError):
        ConstructionParams(Family.D2, 4, gf2)


def test_build_is_deterministic_and_manifest(gf3):
    params = ConstructionParams(Family.D3, 5, gf3, 3)
    a, b = ConstructionService.build(params), ConstructionService.build(params)
    assert a == b
    manifest = ConstructionService.manifest(params, a)
    assert manifest["family"] == "d3" and manifest["t"] == 3 and manifest["n"] == a.n
    assert list(manifest["components"]) == ["S", "S'", "Omega1", "Omega2"]
    assert manifest["components"]["S"] == 26


def test_every_family_builds_through_params(gf2):
    for family in Family.CHOICES:
        t = 3 if family in Family.SPLIT else None
        D = ConstructionService.build(ConstructionParams(family, 4, gf2, t))
        assert D.k == 4
        assert LinalgService.rank(D.columns) == 4
