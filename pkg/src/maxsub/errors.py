"""Exception hierarchy shared across the package."""

from __future__ import annotations


class MaxsubError(Exception):
    """Base class for all package errors."""


class ParseError(MaxsubError):
    """Malformed input file; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OperationError(MaxsubError):
    """An operation was invoked outside its contract or failed honestly."""


class DimensionError(OperationError):
    """Shape or ambient-dimension mismatch."""


class FieldMismatchError(OperationError):
    """Operands live over different fields."""


class NotFiniteFieldError(OperationError):
    """A finite field was required."""


class NotSplitError(OperationError):
    """The semisimple quotient is not split over the base field."""


class UnsupportedFieldError(OperationError):
    """The computation cannot be certified over this field at this size."""


class VerificationFailedError(OperationError):
    """A computed object failed its own post-condition check."""


class CapExceededError(OperationError):
    """A brute-force enumeration cap was exceeded."""


class InvalidInputError(OperationError):
    """Arguments violate a documented precondition."""
