"""
Finite field GF(p^m) and its elements.

Elements are integers in [0, q): the polynomial sum c_i * alpha^i is stored
as sum c_i * p^i (constant term least significant). Arithmetic is polynomial
arithmetic over GF(p) reduced by the monic modulus. For q <= 256 full add/mul
tables are precomputed with numpy; above that every product is computed on
the fly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from mincodes.exceptions import (
    DimensionMismatchError,
    DivisionByZeroError,
    FieldMismatchError,
    InvalidParameterError,
)
from mincodes.utils.constants import TABLE_FIELD_ORDER


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def _undigits(coeffs, p: int) -> int:
    value = 0
    for c in reversed(list(coeffs)):
        value = value * p + int(c)
    return value


def _poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Multiply two coefficient lists over GF(p) and reduce by a monic modulus of degree m."""
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(2 * m - 2, m - 1, -1):
        c = prod[deg]
        if c:
            # x^deg = x^(deg-m) * x^m and x^m = -(modulus without its leading term)
            for i in range(m):
                prod[deg - m + i] = (prod[deg - m + i] - c * modulus[i]) % p
            prod[deg] = 0
    return prod[:m]


@dataclass(frozen=True)
class FieldSpec:
    """
    The field GF(q), q = p^m.

    `modulus` lists the coefficients of the monic irreducible polynomial from
    the constant term upward, leading 1 included; it is empty when m = 1.
    Build instances through FieldService.make_field so the modulus is the
    canonical one.
    """

    p: int
    m: int
    modulus: tuple[int, ...] = ()
    q: int = dc_field(init=False)
    _add: np.ndarray | None = dc_field(init=False, repr=False, compare=False, default=None)
    _mul: np.ndarray | None = dc_field(init=False, repr=False, compare=False, default=None)
    _add_rows: list | None = dc_field(init=False, repr=False, compare=False, default=None)
    _mul_rows: list | None = dc_field(init=False, repr=False, compare=False, default=None)
    _neg_list: list | None = dc_field(init=False, repr=False, compare=False, default=None)
    _inv_list: list | None = dc_field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidParameterError(f"Error: extension degree must be >= 1 (got {self.m})")
        if self.m == 1 and self.modulus:
            raise InvalidParameterError("Error: prime fields carry an empty modulus")
        if self.m > 1 and (len(self.modulus) != self.m + 1 or self.modulus[-1] != 1):
            raise InvalidParameterError("Error: modulus must be monic of degree m")
        object.__setattr__(self, "q", self.p ** self.m)
        if self.q <= TABLE_FIELD_ORDER:
            self._build_tables()

    # ---------- Tables ----------
    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        values = np.arange(q, dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        digits = (values[:, None] // weights[None, :]) % p  # (q, m)

        add_digits = (digits[:, None, :] + digits[None, :, :]) % p
        add = (add_digits * weights).sum(axis=2)

        if m == 1:
            mul = (values[:, None] * values[None, :]) % p
        else:
            prod = np.zeros((q, q, 2 * m - 1), dtype=np.int64)
            for i in range(m):
                for j in range(m):
                    prod[:, :, i + j] += np.outer(digits[:, i], digits[:, j])
            prod %= p
            for deg in range(2 * m - 2, m - 1, -1):
                c = prod[:, :, deg].copy()
                for i in range(m):
                    prod[:, :, deg - m + i] -= c * self.modulus[i]
                prod[:, :, deg] = 0
                prod %= p
            mul = (prod[:, :, :m] * weights).sum(axis=2)

        add = add.astype(np.int64)
        mul = mul.astype(np.int64)
        neg = [int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)]
        inv = [0] + [int(np.flatnonzero(mul[a] == 1)[0]) for a in range(1, q)]
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_add_rows", add.tolist())
        object.__setattr__(self, "_mul_rows", mul.tolist())
        object.__setattr__(self, "_neg_list", neg)
        object.__setattr__(self, "_inv_list", inv)

    @property
    def has_tables(self) -> bool:
        return self._add is not None

    @property
    def is_prime(self) -> bool:
        return self.m == 1

    @property
    def label(self) -> str:
        """Serialized field identity: 'p^m', or plain 'p' for prime fields."""
        return str(self.p) if self.m == 1 else f"{self.p}^{self.m}"

    def describe(self) -> dict:
        return {"field": f"{self.p}^{self.m}", "p": self.p, "m": self.m, "q": self.q,
                "modulus": list(self.modulus), "tables": self.has_tables}

    # ---------- Scalar arithmetic on encodings ----------
    def check(self, a: int) -> int:
        if not (0 <= a < self.q):
            raise InvalidParameterError(f"Error: {a} is not an element of GF({self.q})")
        return a

    def digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.m)

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._add_rows is not None:
            return self._add_rows[a][b]
        return _undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))], self.p)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self._neg_list is not None:
            return self._neg_list[a]
        return _undigits([(-x) % self.p for x in self.digits(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_rows is not None:
            return self._mul_rows[a][b]
        if a == 0 or b == 0:
            return 0
        return _undigits(_poly_mulmod(self.digits(a), self.digits(b), self.modulus, self.p), self.p)

    def power(self, a: int, e: int) -> int:
        result, base = 1, a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError()
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_list is not None:
            return self._inv_list[a]
        return self.power(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def nonzero(self) -> range:
        return range(1, self.q)

    # ---------- Array arithmetic (numpy, elementwise with broadcasting) ----------
    def add_arrays(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a, b]
        return np.frompyfunc(self.add, 2, 1)(a, b).astype(np.int64)

    def mul_arrays(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        if self._mul is not None:
            return self._mul[a, b]
        return np.frompyfunc(self.mul, 2, 1)(a, b).astype(np.int64)

    def dot(self, messages, columns) -> np.ndarray:
        """
        Inner products of every row of `messages` (N x k) with every row of
        `columns` (n x k); returns an N x n array of encodings.
        """
        messages = np.atleast_2d(np.asarray(messages, dtype=np.int64))
        columns = np.atleast_2d(np.asarray(columns, dtype=np.int64))
        if messages.shape[1] != columns.shape[1]:
            raise DimensionMismatchError("Error: inner product of vectors with different lengths")
        if self.m == 1:
            return (messages @ columns.T) % self.p
        acc = np.zeros((messages.shape[0], columns.shape[0]), dtype=np.int64)
        for j in range(messages.shape[1]):
            acc = self.add_arrays(acc, self.mul_arrays(messages[:, j][:, None], columns[:, j][None, :]))
        return acc

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(q) carrying its field; supports the usual operators."""

    value: int
    field: FieldSpec = dc_field(repr=False)

    def __post_init__(self) -> None:
        self.field.check(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError()
            return other.value
        return self.field.check(int(other))

    def __add__(self, other) -> "FieldElement":
        return FieldElement(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        return FieldElement(self.field.sub(self.value, self._other(other)), self.field)

    def __mul__(self, other) -> "FieldElement":
        return FieldElement(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field.neg(self.value), self.field)

    def __truediv__(self, other) -> "FieldElement":
        return FieldElement(self.field.div(self.value, self._other(other)), self.field)

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field.power(self.value, e), self.field)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def is_zero(self) -> bool:
        return self.value == 0
