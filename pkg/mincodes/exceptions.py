"""
Custom exception classes for the mincodes toolkit.

Every error carries a human-readable message and the exit code the CLI
should return when the error escapes a command:

- DomainError       -> 1 (bad field, rank-deficient input, bad split t, ...)
- InputFormatError  -> 1 (a defining-set file that cannot be parsed)
- BudgetExhausted   -> 3 (a search ran out of backtracking nodes)

Usage errors are left to click, which exits with 2.
"""

from __future__ import annotations


class MinCodesError(Exception):
    """Base class for every error raised by mincodes."""

    exit_code = 1
    default_message = "Error: mincodes failure"

    def __init__(self, message: str | None = None) -> None:
        self.message = message or self.default_message
        super().__init__(self.message)

    def __str__(self) -> str:  # pragma: no cover
        return self.message


# ---------- Domain errors ----------
class DomainError(MinCodesError):
    """The request is well-formed but mathematically invalid."""

    default_message = "Error: invalid request"


class NonPrimeCharacteristicError(DomainError):
    """Raised when a field characteristic is not prime (or an order is not a prime power)."""

    default_message = "Error: characteristic is not prime"


class FieldTooLargeError(DomainError):
    """Raised when q = p^m exceeds the supported element count."""

    default_message = "Error: field is too large"


class InvalidParameterError(DomainError):
    """Raised for out-of-range numeric parameters (m < 1, k < 1, n < k, ...)."""

    default_message = "Error: invalid parameter"


class DivisionByZeroError(DomainError):
    """Raised when inverting the zero element."""

    default_message = "Error: zero has no multiplicative inverse"


class DimensionMismatchError(DomainError):
    """Raised when vectors or codewords of different lengths are combined."""

    default_message = "Error: dimension mismatch"


class FieldMismatchError(DomainError):
    """Raised when objects over different fields are combined."""

    default_message = "Error: field mismatch"


class ZeroVectorError(DomainError):
    """Raised when an operation needs a nonzero vector (hyperplane, codeword test)."""

    default_message = "Error: vector must be nonzero"


class RankDeficientError(DomainError):
    """Raised when a defining set does not span F_q^k."""

    def __init__(self, actual_rank: int, k: int | None = None, message: str | None = None) -> None:
        self.actual_rank = actual_rank
        self.k = k
        if message is None:
            expected = f", expected {k}" if k is not None else ""
            message = f"Error: defining set is rank deficient (rank {actual_rank}{expected})"
        super().__init__(message)


class EnumerationTooLargeError(DomainError):
    """Raised when an exhaustive enumeration would exceed its fixed budget."""

    default_message = "Error: enumeration exceeds budget"


class ZeroColumnPresentError(DomainError):
    """Raised by the counting identity, which is stated for zero-free defining sets."""

    default_message = "Error: defining set contains a zero column"


class BadSplitError(DomainError):
    """Raised when the split parameter t violates k/2 < t < k."""

    default_message = "Error: split parameter t must satisfy k/2 < t < k"


class TargetTooSmallError(DomainError):
    """Raised when extending a defining set to fewer columns than it already has."""

    default_message = "Error: target length is smaller than the defining set"


class ConstructionError(DomainError):
    """Raised when a construction fails its own membership or independence checks."""

    default_message = "Error: construction invariant violated"


class CheckerDisagreementError(DomainError):
    """Raised when the exact minimality checkers disagree on the same code."""

    default_message = "Error: minimality checkers disagree"


# ---------- Input format errors ----------
class InputFormatError(MinCodesError):
    """A defining-set file does not follow the documented text format."""

    default_message = "Error: malformed defining-set file"


class MalformedHeaderError(InputFormatError):
    """Raised when line 1 is not `q k n`."""

    default_message = "Error: malformed header (expected `q k n`)"


class BadElementEncodingError(InputFormatError):
    """Raised when a coordinate is not an integer in [0, q)."""

    def __init__(self, line: int, column: int, message: str | None = None) -> None:
        self.line = line
        self.column = column
        super().__init__(message or f"Error: bad element encoding at line {line}, column {column}")


class LengthMismatchError(InputFormatError):
    """Raised when a column line has the wrong number of coordinates or lines are missing."""

    def __init__(self, line: int, message: str | None = None) -> None:
        self.line = line
        super().__init__(message or f"Error: length mismatch at line {line}")


# ---------- Budget ----------
class BudgetExhaustedError(MinCodesError):
    """Raised by the CLI after reporting a search that ran out of nodes."""

    exit_code = 3
    default_message = "Error: search budget exhausted"
