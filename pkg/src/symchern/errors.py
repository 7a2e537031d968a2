"""Exception types shared across the package."""

from .exact.poly import ZeroDenominator, ZeroPolynomial
from .exact.scalars import ParseError


class SymchernError(ValueError):
    """Base class for domain errors raised by this package."""


class DimensionTooSmall(SymchernError):
    pass


class DimensionTooLarge(SymchernError):
    pass


class MismatchedModelSpace(SymchernError):
    pass


class WrongDegree(SymchernError):
    pass


class NonRealForm(SymchernError):
    pass


class WrongType(SymchernError):
    """A form expected to be of complex type (p, 0) has some conjugate component."""


class NonPositiveVolume(SymchernError):
    pass


class InvalidSpec(SymchernError):
    pass


class DomainViolation(SymchernError):
    """The volume polynomial of a family vanishes inside the admissible domain."""


class InvariantViolation(RuntimeError):
    """An identity that must hold exactly produced a nonzero residual."""


__all__ = [
    "DimensionTooLarge",
    "DimensionTooSmall",
    "DomainViolation",
    "InvalidSpec",
    "InvariantViolation",
    "MismatchedModelSpace",
    "NonPositiveVolume",
    "NonRealForm",
    "ParseError",
    "SymchernError",
    "WrongDegree",
    "WrongType",
    "ZeroDenominator",
    "ZeroPolynomial",
]
