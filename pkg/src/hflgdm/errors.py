"""Exceptions raised by validation and the decision algorithms.

Validation errors carry the offending cell coordinates (1-based, as decision
makers see them in a preference matrix).
"""


class HflprError(Exception):
    """Base class for all library errors."""


class ValidationError(HflprError):
    """A candidate matrix violates an HFLPR structural rule."""

    def __init__(self, message, i=None, j=None):
        super().__init__(message)
        self.i = i
        self.j = j


class IndexOutOfRange(ValidationError):
    """A term index falls outside [0, 2*tau]."""


class ReciprocityViolation(ValidationError):
    """Paired indices of cells (i,j) and (j,i) do not sum to 2*tau."""


class DiagonalViolation(ValidationError):
    """A diagonal cell is not the single indifference term."""


class LengthMismatch(ValidationError):
    """Cells (i,j) and (j,i) carry a different number of terms."""


class OrderingViolation(ValidationError):
    """A cell's term indices are not in non-decreasing order."""


class DimensionMismatch(HflprError):
    """Two matrices (or vectors) that must share a shape do not."""


class UndefinedForN(HflprError):
    """The consistency index denominator vanishes for n < 3."""


class OutOfTable(HflprError):
    """No published critical value exists for the requested (n, alpha)."""


class IterationCapExceeded(HflprError):
    """An iterative procedure hit its safety cap before terminating.

    The partial result (a report or trace) is attached so callers can
    inspect how far the procedure got.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
