"""
Exception hierarchy for the monomial_stci package.

Every error raised on bad input derives from StciError, which is itself a
ValueError so callers can catch either.
"""


class StciError(ValueError):
    """Base class for all input and construction errors."""


class VariableSetMismatchError(StciError):
    """Two objects live over different variable sets."""


class DimensionMismatchError(StciError):
    """A point or exponent vector has the wrong number of coordinates."""


class ParseError(StciError):
    """Text could not be parsed as a monomial, polynomial or matrix."""


class InvalidCurveParametersError(StciError):
    """Curve exponents violate 0 < eps2 <= eps1 < delta (or the affine analogue)."""


class InvalidMatrixError(StciError):
    """A matrix has the wrong shape, an invalid column, or is not simple when required."""


class NegativeExponentError(StciError):
    """A closed formula produced a negative exponent."""


class FieldConstructionError(StciError):
    """A finite field could not be built (non-prime characteristic, bad degree)."""


class NonHomogeneousError(StciError):
    """A projective computation received a non-homogeneous polynomial."""
