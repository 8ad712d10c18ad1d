from __future__ import annotations

import logging
from itertools import product

from mincodes.exceptions import (
    DivisionByZeroError,
    FieldTooLargeError,
    InvalidParameterError,
    NonPrimeCharacteristicError,
)
from mincodes.models.field import FieldElement, FieldSpec
from mincodes.services.common import _registry, is_prime, prime_power
from mincodes.utils.constants import MAX_FIELD_ORDER

logger = logging.getLogger("mincodes.field")


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by the monic b over GF(p); both lists constant term first."""
    rem = list(a)
    db = len(b) - 1
    for deg in range(len(rem) - 1, db - 1, -1):
        c = rem[deg]
        if c:
            for i in range(db + 1):
                rem[deg - db + i] = (rem[deg - db + i] - c * b[i]) % p
    return rem[:db]


class FieldService:
    """Construction of canonical fields and element-level arithmetic."""

    @staticmethod
    def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
        """Trial division by every monic polynomial of degree 1..m/2."""
        m = len(modulus) - 1
        for d in range(1, m // 2 + 1):
            for low in product(range(p), repeat=d):
                divisor = list(low) + [1]
                if not any(_poly_mod(list(modulus), divisor, p)):
                    return False
        return True

    @staticmethod
    def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
        """
        Smallest monic irreducible of degree m, comparing coefficient lists
        from the constant term upward.
        """
        if m == 1:
            return ()
        for low in product(range(p), repeat=m):
            candidate = tuple(low) + (1,)
            if low[0] == 0:
                continue  # divisible by x
            if FieldService.is_irreducible(candidate, p):
                return candidate
        raise InvalidParameterError(f"Error: no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover

    @staticmethod
    def make_field(p: int, m: int = 1) -> FieldSpec:
        """Return GF(p^m) with its canonical modulus; equal (p, m) give equal specs."""
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeCharacteristicError(f"Error: characteristic {p} is not prime")
        if not isinstance(m, int) or m < 1:
            raise InvalidParameterError(f"Error: extension degree must be >= 1 (got {m})")
        if p ** m > MAX_FIELD_ORDER:
            raise FieldTooLargeError(f"Error: GF({p}^{m}) has more than {MAX_FIELD_ORDER} elements")

        reg = _registry()
        cached = reg.get(p, m)
        if cached is not None:
            return cached

        spec = FieldSpec(p, m, FieldService.canonical_modulus(p, m))
        logger.info("built GF(%d^%d) modulus=%s tables=%s", p, m, list(spec.modulus), spec.has_tables)
        return reg.put(spec)

    @staticmethod
    def field_of_order(q: int) -> FieldSpec:
        pm = prime_power(q)
        if pm is None:
            raise NonPrimeCharacteristicError(f"Error: {q} is not a prime power")
        return FieldService.make_field(*pm)

    @staticmethod
    def parse_field_label(label: str) -> FieldSpec:
        """Accept 'p^m' or a plain order such as '9'."""
        text = (label or "").strip()
        try:
            if "^" in text:
                p_text, m_text = text.split("^", 1)
                return FieldService.make_field(int(p_text), int(m_text))
            return FieldService.field_of_order(int(text))
        except ValueError:
            raise InvalidParameterError(f"Error: cannot read field '{label}'") from None

    @staticmethod
    def field_label(spec: FieldSpec) -> str:
        return spec.label

    # ---------- Element operations ----------
    @staticmethod
    def add(a: FieldElement, b: FieldElement) -> FieldElement:
        return a + b

    @staticmethod
    def mul(a: FieldElement, b: FieldElement) -> FieldElement:
        return a * b

    @staticmethod
    def inv(a: FieldElement) -> FieldElement:
        if a.is_zero():
            raise DivisionByZeroError()
        return a.inverse()

    @staticmethod
    def enumerate_nonzero(spec: FieldSpec) -> list[FieldElement]:
        return [FieldElement(v, spec) for v in spec.nonzero()]
