"""Checker results and the witnesses that back a negative verdict."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Union

from mincodes.models.vector import Vector
from mincodes.utils.constants import INCONCLUSIVE


@dataclass(frozen=True)
class HyperplaneWitness:
    """
    A projective y whose orthogonal columns span only `dim` < k-1 dimensions.
    `covering_x` is an independent message with c(x) covered by c(y).
    """

    y: Vector
    dim: int
    covering_x: Vector | None = None

    def as_record(self) -> dict:
        record = {"kind": "hyperplane", "y": list(self.y.coords), "dim": self.dim}
        if self.covering_x is not None:
            record["x"] = list(self.covering_x.coords)
        return record


@dataclass(frozen=True)
class PairWitness:
    """
    Independent messages x, y with c(x) covered by c(y). The weight-identity
    checker also records both sides of the identity for a = y, b = x, which
    agree exactly when c(x) is covered by c(y).
    """

    x: Vector
    y: Vector
    lhs: int | None = None
    rhs: int | None = None

    def as_record(self) -> dict:
        record = {"kind": "pair", "x": list(self.x.coords), "y": list(self.y.coords)}
        if self.lhs is not None:
            record["lhs"] = self.lhs
            record["rhs"] = self.rhs
        return record


Witness = Union[HyperplaneWitness, PairWitness]


@dataclass(frozen=True)
class MinimalityVerdict:
    minimal: bool | str
    method: str
    witness: Witness | None = None
    work: dict = dc_field(default_factory=dict)
    wall_time: float | None = None

    @property
    def inconclusive(self) -> bool:
        return self.minimal == INCONCLUSIVE

    @property
    def verdict(self) -> str:
        if self.inconclusive:
            return INCONCLUSIVE
        return "minimal" if self.minimal else "not_minimal"

    def as_record(self, timing: bool = False) -> dict:
        record = {
            "record": "verdict",
            "method": self.method,
            "verdict": self.verdict,
            "witness": self.witness.as_record() if self.witness is not None else None,
            "work": dict(self.work),
        }
        if timing and self.wall_time is not None:
            record["wall_time"] = round(self.wall_time, 6)
        return record
