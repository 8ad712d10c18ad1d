"""
Unit tests for FieldService and FieldSpec: canonical moduli, table and
on-the-fly arithmetic, field axioms over every small field, and an
independent cross-check against the galois package when it is installed.
"""

import itertools
import random

import numpy as np
import pytest

from mincodes.exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    FieldTooLargeError,
    InvalidParameterError,
    NonPrimeCharacteristicError,
)
from mincodes.models.field import FieldElement, FieldSpec, _poly_mulmod, _undigits
from mincodes.services.field_service import FieldService

SMALL_ORDERS = (2, 3, 4, 5, 7, 8, 9, 16)


def test_prime_field_arithmetic(gf5):
    a, b = gf5.element(3), gf5.element(4)
    assert int(a + b) == 2
    assert int(a * b) == 2
    assert int(FieldService.inv(a)) == 2
    assert int(-a) == 2
    assert int(a / b) == 2  # 3 * 4^-1 = 3 * 4 = 12 = 2


def test_gf4_inverse_and_modulus(gf4):
    assert gf4.modulus == (1, 1, 1)
    assert int(FieldService.inv(gf4.element(2))) == 3
    assert gf4.mul(2, 2) == 3  # alpha^2 = alpha + 1


def test_gf9_examples():
    spec = FieldService.make_field(3, 2)
    assert spec.modulus == (1, 0, 1)
    assert spec.add(3, 4) == 7
    assert spec.mul(3, 3) == 2  # alpha^2 = -1


def test_gf8_canonical_modulus_and_product():
    spec = FieldService.make_field(2, 3)
    # x^3 + 1 is divisible by x + 1; x^3 + x^2 + 1 is the first irreducible
    assert spec.modulus == (1, 0, 1, 1)
    assert spec.mul(2, 4) == 5


def test_make_field_is_cached_and_deterministic():
    a = FieldService.make_field(2, 4)
    b = FieldService.field_of_order(16)
    assert a is b
    assert a == FieldSpec(2, 4, FieldService.canonical_modulus(2, 4))


@pytest.mark.parametrize("p, m, exc", [
    (4, 1, NonPrimeCharacteristicError),
    (1, 1, NonPrimeCharacteristicError),
    (2, 0, InvalidParameterError),
    (2, 17, FieldTooLargeError),
    (257, 2, FieldTooLargeError),
])
def test_make_field_rejects_bad_parameters(p, m, exc):
    with pytest.raises(exc):
        FieldService.make_field(p, m)


def test_inverse_of_zero_raises(gf3):
    with pytest.raises(DivisionByZeroError):
        FieldService.inv(gf3.element(0))
    with pytest.raises(DivisionByZeroError):
        gf3.inv(0)


def test_elements_of_different_fields_do_not_mix(gf2, gf3):
    with pytest.raises(FieldMismatchError):
        gf2.element(1) + gf3.element(1)


def test_element_out_of_range(gf3):
    with pytest.raises(InvalidParameterError):
        FieldElement(3, gf3)


@pytest.mark.parametrize("label, q", [("2", 2), ("9", 9), ("3^2", 9), ("2^4", 16), (" 7 ", 7)])
def test_parse_field_label(label, q):
    assert FieldService.parse_field_label(label).q == q


@pytest.mark.parametrize("label, exc", [
    ("6", NonPrimeCharacteristicError),
    ("abc", InvalidParameterError),
    ("2^x", InvalidParameterError),
    ("", InvalidParameterError),
])
def test_parse_field_label_rejects(label, exc):
    with pytest.raises(exc):
        FieldService.parse_field_label(label)


def test_field_label_round_trip():
    for q in SMALL_ORDERS:
        spec = FieldService.field_of_order(q)
        assert FieldService.parse_field_label(FieldService.field_label(spec)) is spec


def test_enumerate_nonzero(gf4):
    assert [int(e) for e in FieldService.enumerate_nonzero(gf4)] == [1, 2, 3]


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    f = FieldService.field_of_order(q)
    els = range(q)
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_frobenius_is_additive(q):
    f = FieldService.field_of_order(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert f.power(f.add(a, b), f.p) == f.add(f.power(a, f.p), f.power(b, f.p))


@pytest.mark.parametrize("q", (16, 27, 49))
def test_tables_agree_with_polynomial_products(q):
    f = FieldService.field_of_order(q)
    assert f.has_tables
    for a, b in itertools.product(range(q), repeat=2):
        expected = _undigits(_poly_mulmod(f.digits(a), f.digits(b), f.modulus, f.p), f.p) if a and b else 0
        assert f.mul(a, b) == expected


def test_large_field_runs_without_tables():
    f = FieldService.make_field(2, 9)
    assert not f.has_tables
    rng = random.Random(7)
    for _ in range(200):
        a = rng.randrange(1, f.q)
        assert f.mul(a, f.inv(a)) == 1
        b = rng.randrange(f.q)
        assert f.sub(f.add(a, b), b) == a


def test_array_arithmetic_matches_scalar(gf4):
    a = np.arange(4)
    table = gf4.mul_arrays(a[:, None], a[None, :])
    assert table.tolist() == [[gf4.mul(x, y) for y in range(4)] for x in range(4)]
    sums = gf4.add_arrays(a[:, None], a[None, :])
    assert sums.tolist() == [[gf4.add(x, y) for y in range(4)] for x in range(4)]


@pytest.mark.parametrize("p, m", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5)])
def test_multiplication_matches_galois(p, m):
    galois = pytest.importorskip("galois")
    f = FieldService.make_field(p, m)
    poly = galois.Poly(list(reversed(f.modulus)), field=galois.GF(p))
    GF = galois.GF(p ** m, irreducible_poly=poly)
    x = GF(np.arange(f.q))
    theirs = (x[:, None] * x[None, :]).view(np.ndarray).astype(np.int64)
    ours = np.array([[f.mul(a, b) for b in range(f.q)] for a in range(f.q)], dtype=np.int64)
    assert (theirs == ours).all()
