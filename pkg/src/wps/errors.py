"""Exception hierarchy with stable error codes for CLI reporting."""

from __future__ import annotations


class WPSError(Exception):
    """Base class for domain errors; `code` is stable across releases."""

    code = "E_GENERIC"


class FieldMismatch(WPSError):
    code = "E_FIELD_MISMATCH"


class ZeroPolynomial(WPSError):
    code = "E_ZERO_POLYNOMIAL"


class NotHomogeneous(WPSError):
    code = "E_NOT_HOMOGENEOUS"


class Mismatch(WPSError):
    code = "E_MISMATCH"


class Unsupported(WPSError):
    code = "E_UNSUPPORTED"


class NotOnPatch(WPSError):
    code = "E_NOT_ON_PATCH"


class PrimeUnsuitable(WPSError):
    code = "E_PRIME_UNSUITABLE"


class BadCase(WPSError):
    code = "E_BAD_CASE"


class BoundTooSmall(WPSError):
    code = "E_BOUND_TOO_SMALL"


class NotWellFormed(WPSError):
    code = "E_NOT_WELL_FORMED"


class InvalidDegreeWeight(WPSError):
    code = "E_INVALID_DEGREE_WEIGHT"


class NonIntegerGenus(WPSError):
    code = "E_GENUS_NONINT"


class NotSufficientlyGeneral(WPSError):
    code = "E_NOT_SUFFICIENTLY_GENERAL"


class NotAConePoint(WPSError):
    code = "E_NOT_A_CONE_POINT"


class DegenerateEdge(WPSError):
    code = "E_DEGENERATE_EDGE"


class NumeratorNotPolynomial(WPSError):
    code = "E_NUMERATOR_NOT_POLYNOMIAL"


class AmbiguousLowDegree(WPSError):
    code = "E_AMBIGUOUS_LOW_DEGREE"


class TooLarge(WPSError):
    code = "E_TOO_LARGE"


class ParseError(WPSError):
    """Syntax error in a polynomial, weight, or point string."""

    code = "E_PARSE"

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariable(ParseError):
    code = "E_UNKNOWN_VARIABLE"
