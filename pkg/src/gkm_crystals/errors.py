"""Exception hierarchy shared across the package.

InputError subclasses signal malformed user input (CLI exit code 2).
DepthExceededError signals a blown enumeration cap (CLI exit code 3).
The remaining classes are correctness tripwires or evaluation failures;
they indicate bugs or ill-formed data fed past validation and are never
silenced by library code.
"""

from __future__ import annotations


class GkmError(Exception):
    """Base class for all package errors."""


class InputError(GkmError):
    """Malformed input data (matrices, quivers, files, flags)."""


class NotSymmetricError(InputError):
    pass


class BadDiagonalError(InputError):
    pass


class PositiveOffDiagonalError(InputError):
    pass


class IndexOutOfRangeError(InputError):
    pass


class LengthMismatchError(InputError):
    pass


class NegativeCoordinateError(InputError):
    pass


class ShapeMismatchError(InputError):
    pass


class UnknownFormatError(InputError):
    pass


class HeightExceededError(InputError):
    pass


class DimensionExceededError(InputError):
    pass


class DepthExceededError(GkmError):
    """Enumeration produced more nodes than the configured cap."""


class EvaluationFailureError(GkmError):
    """A crystal map could not be evaluated on a supplied element."""


class StrippingStuckError(GkmError):
    """No raising operator applies to an element that is not the head."""


class InternalInconsistencyError(GkmError):
    """Two routes to the same quantity disagreed. Must never fire."""


class InexactDivisionError(GkmError):
    """An exact polynomial division left a remainder. Must never fire."""
