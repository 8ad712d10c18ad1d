from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from mincodes.exceptions import BadSplitError, InvalidParameterError
from mincodes.models.field import FieldSpec
from mincodes.utils.constants import Family


@dataclass(frozen=True)
class ConstructionParams:
    """Which named defining set to build. `t` is required by the split families d1-d4 only."""

    family: str
    k: int
    field: FieldSpec = dc_field(repr=False)
    t: int | None = None

    def __post_init__(self) -> None:
        if self.family not in Family.CHOICES:
            raise InvalidParameterError(f"Error: unknown family '{self.family}'")
        if self.k < 1:
            raise InvalidParameterError("Error: dimension k must be >= 1")
        if self.family in Family.SPLIT:
            if self.t is None or not (2 * self.t > self.k and self.t < self.k):
                raise BadSplitError(f"Error: split parameter t={self.t} must satisfy k/2 < t < k (k={self.k})")
