"""Vectors of F_q^k and subspaces held in reduced row-echelon form."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from mincodes.exceptions import DimensionMismatchError, FieldMismatchError, InvalidParameterError
from mincodes.models.field import FieldSpec


@dataclass(frozen=True)
class Vector:
    """A row vector; coordinates are field encodings in [0, q)."""

    coords: tuple[int, ...]
    field: FieldSpec = dc_field(repr=False)

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise InvalidParameterError("Error: vectors need at least one coordinate")
        for c in coords:
            self.field.check(c)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, k: int, spec: FieldSpec) -> "Vector":
        return cls((0,) * k, spec)

    @classmethod
    def unit(cls, i: int, k: int, spec: FieldSpec) -> "Vector":
        """e_i with 0-based i."""
        coords = [0] * k
        coords[i] = 1
        return cls(tuple(coords), spec)

    @property
    def k(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _compatible(self, other: "Vector") -> None:
        if other.field != self.field:
            raise FieldMismatchError()
        if other.k != self.k:
            raise DimensionMismatchError(f"Error: vectors of length {self.k} and {other.k}")

    def __add__(self, other: "Vector") -> "Vector":
        self._compatible(other)
        f = self.field
        return Vector(tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)), f)

    def __sub__(self, other: "Vector") -> "Vector":
        self._compatible(other)
        f = self.field
        return Vector(tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)), f)

    def __neg__(self) -> "Vector":
        return Vector(tuple(self.field.neg(a) for a in self.coords), self.field)

    def scale(self, a: int) -> "Vector":
        f = self.field
        return Vector(tuple(f.mul(a, c) for c in self.coords), f)

    def leading_index(self) -> int | None:
        for i, c in enumerate(self.coords):
            if c:
                return i
        return None

    def normalized(self) -> "Vector":
        """The scalar multiple whose first nonzero coordinate is 1 (its projective representative)."""
        lead = self.leading_index()
        if lead is None or self.coords[lead] == 1:
            return self
        return self.scale(self.field.inv(self.coords[lead]))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=np.int64)

    def encode(self) -> str:
        """Space-separated coordinate encodings, as written in defining-set files."""
        return " ".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of F_q^k stored by its reduced row-echelon basis, so two
    subspaces are equal exactly when their bases are equal.
    """

    basis: tuple[Vector, ...]
    ambient_dim: int
    field: FieldSpec = dc_field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(v.leading_index() for v in self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Vector) -> Vector:
        """Remainder of v after eliminating every pivot column."""
        if v.k != self.ambient_dim:
            raise DimensionMismatchError()
        f = self.field
        coords = list(v.coords)
        for row, piv in zip(self.basis, self.pivots):
            c = coords[piv]
            if c:
                for j in range(piv, self.ambient_dim):
                    if row.coords[j]:
                        coords[j] = f.sub(coords[j], f.mul(c, row.coords[j]))
        return Vector(tuple(coords), f)

    def contains(self, v: Vector) -> bool:
        return self.reduce(v).is_zero()

    def __contains__(self, v: Vector) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)
