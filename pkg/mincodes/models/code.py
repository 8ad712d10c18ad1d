"""Defining multisets, codewords and weight distributions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from mincodes.exceptions import FieldMismatchError, InvalidParameterError, DimensionMismatchError
from mincodes.models.field import FieldSpec
from mincodes.models.vector import Vector


@dataclass(frozen=True)
class DefiningSet:
    """
    The ordered multiset D = (d_0, ..., d_{n-1}) of columns in F_q^k.

    The code C(D) is {(<x, d_0>, ..., <x, d_{n-1}>) : x in F_q^k}. Column
    order is kept because positions are what files and supports refer to.
    Rank is not checked here; CodeService.validate_code does that.
    """

    columns: tuple[Vector, ...]
    field: FieldSpec = dc_field(repr=False)
    k: int = 0
    _matrix: np.ndarray | None = dc_field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        columns = tuple(self.columns)
        k = self.k or (columns[0].k if columns else 0)
        if k < 1:
            raise InvalidParameterError("Error: dimension k must be >= 1")
        if len(columns) < k:
            raise InvalidParameterError(f"Error: length n={len(columns)} is smaller than k={k}")
        for col in columns:
            if col.field != self.field:
                raise FieldMismatchError()
            if col.k != k:
                raise DimensionMismatchError(f"Error: column of length {col.k} in a k={k} defining set")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "k", k)

    @classmethod
    def from_rows(cls, rows, spec: FieldSpec, k: int | None = None) -> "DefiningSet":
        """Build from an iterable of coordinate sequences (one per column)."""
        columns = tuple(Vector(tuple(r), spec) for r in rows)
        return cls(columns, spec, k or (columns[0].k if columns else 0))

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def matrix(self) -> np.ndarray:
        """n x k array of column encodings (cached)."""
        if self._matrix is None:
            arr = np.array([c.coords for c in self.columns], dtype=np.int64).reshape(self.n, self.k)
            arr.setflags(write=False)
            object.__setattr__(self, "_matrix", arr)
        return self._matrix

    def zero_columns(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.columns) if c.is_zero())

    def as_rows(self) -> list[tuple[int, ...]]:
        return [c.coords for c in self.columns]

    def with_columns(self, extra) -> "DefiningSet":
        return DefiningSet(self.columns + tuple(extra), self.field, self.k)

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.columns)


@dataclass(frozen=True)
class Codeword:
    """c(x) as field encodings; `message` records the generating x when known."""

    coords: tuple[int, ...]
    field: FieldSpec = dc_field(repr=False)
    message: Vector | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coords if c)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scale(self, a: int) -> "Codeword":
        f = self.field
        msg = self.message.scale(a) if self.message is not None else None
        return Codeword(tuple(f.mul(a, c) for c in self.coords), f, msg)

    def __add__(self, other: "Codeword") -> "Codeword":
        if other.n != self.n:
            raise DimensionMismatchError()
        f = self.field
        msg = None
        if self.message is not None and other.message is not None:
            msg = self.message + other.message
        return Codeword(tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)), f, msg)


@dataclass(frozen=True)
class WeightDistribution:
    """Number of codewords of each Hamming weight, over all q^k messages."""

    counts: dict[int, int]
    q: int
    k: int
    n: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w > 0 and c > 0)

    @property
    def w_min(self) -> int | None:
        weights = self.nonzero_weights
        return weights[0] if weights else None

    @property
    def w_max(self) -> int | None:
        weights = self.nonzero_weights
        return weights[-1] if weights else None

    def as_record(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "counts": {str(w): self.counts[w] for w in sorted(self.counts)},
            "w_min": self.w_min,
            "w_max": self.w_max,
        }
