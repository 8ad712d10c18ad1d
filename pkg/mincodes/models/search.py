"""Bounds on n(k;q), single-length existence results and full search reports."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from mincodes.exceptions import InvalidParameterError
from mincodes.models.code import DefiningSet
from mincodes.utils.constants import Existence, SearchStatus


@dataclass(frozen=True)
class Bounds:
    k: int
    q: int
    lower_exclusive: int
    upper_inclusive: int
    counting_lower_inclusive: int

    def __post_init__(self) -> None:
        if not self.lower_exclusive < self.upper_inclusive:
            raise InvalidParameterError(
                f"Error: empty bracket ({self.lower_exclusive}, {self.upper_inclusive}]"
            )

    def as_record(self) -> dict:
        return {
            "record": "bounds",
            "k": self.k,
            "q": self.q,
            "lower_exclusive": self.lower_exclusive,
            "upper_inclusive": self.upper_inclusive,
            "counting_lower_inclusive": self.counting_lower_inclusive,
        }


@dataclass(frozen=True)
class ExistenceResult:
    """Outcome of deciding whether a minimal [n,k]_q code exists."""

    status: str
    n: int
    witness: DefiningSet | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == Existence.FOUND

    @property
    def exhausted(self) -> bool:
        return self.status == Existence.EXHAUSTED


@dataclass(frozen=True)
class SearchReport:
    """
    n(k;q) as an exact value or a bracket.

    `nonexistence` maps every length proved impossible by exhaustion to the
    nodes that proof took; `upper_inclusive` is the smallest length known to
    admit a minimal code (the witness length when one was found).
    """

    k: int
    q: int
    status: str
    lower_exclusive: int
    upper_inclusive: int
    n_min: int | None = None
    witness: DefiningSet | None = None
    nonexistence: dict[int, int] = dc_field(default_factory=dict)
    budget: int = 0
    budget_used: int = 0
    wall_time: float | None = None

    @property
    def exact(self) -> bool:
        return self.status == SearchStatus.EXACT

    def as_record(self, timing: bool = False) -> dict:
        record = {
            "record": "search",
            "k": self.k,
            "q": self.q,
            "status": self.status,
            "n_min": self.n_min,
            "lower_exclusive": self.lower_exclusive,
            "upper_inclusive": self.upper_inclusive,
            "nonexistence": {str(n): nodes for n, nodes in sorted(self.nonexistence.items())},
            "budget": self.budget,
            "budget_used": self.budget_used,
            "witness": [list(c.coords) for c in self.witness.columns] if self.witness else None,
        }
        if timing and self.wall_time is not None:
            record["wall_time"] = round(self.wall_time, 6)
        return record
