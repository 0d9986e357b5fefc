"""Exception types shared across the package."""


class KakeyaError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(KakeyaError):
    """Two scalars (or geometric objects) from different fields were combined."""


class DivisionByZero(KakeyaError):
    """Division by the field zero (or by a value below the real tolerance)."""


class ZeroVector(KakeyaError):
    """A projective point was requested for the all-zero coordinate vector."""


class AmbientMismatch(KakeyaError):
    """Operands live in projective spaces of different dimensions."""


class UnsupportedDimension(KakeyaError):
    """The requested ambient dimension is outside the supported range."""


class UnsupportedField(KakeyaError):
    """The field kind (or its parameters) is not usable for this operation."""


class DegenerateSeed(KakeyaError):
    """A lifting step produced a flat of the wrong dimension."""


class UndefinedBasePoint(KakeyaError):
    """A base intersection point required by the lifting does not exist."""


class SeedTooSmall(KakeyaError):
    """The planar seed has too few lines for the requested dimension."""


class DimensionMismatch(KakeyaError):
    """A polynomial or point has the wrong number of variables/coordinates."""


class ZeroPolynomial(KakeyaError):
    """The zero polynomial was passed where a nonzero one is required."""


class NotHomogeneous(KakeyaError):
    """A homogeneous polynomial was required."""


class GridMissing(KakeyaError):
    """The direction set of a line family does not contain the full grid."""


class HypothesisViolation(KakeyaError):
    """A line family does not satisfy the counting hypothesis of a bound."""
