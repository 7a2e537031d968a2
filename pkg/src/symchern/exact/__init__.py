"""Exact scalar, polynomial and root-isolation layer."""

from fractions import Fraction

from .poly import (
    MINUS_INF,
    PLUS_INF,
    PolyQ,
    ZeroDenominator,
    ZeroPolynomial,
    binom,
    poly_arith,
    rational_function_limit,
)
from .roots import (
    ALL_REALS,
    DEFAULT_WIDTH,
    NEGATIVE,
    POSITIVE,
    IsolatingInterval,
    count_roots,
    isolate_real_roots,
    sturm_sequence,
)
from .linalg import congruence_diagonalize, inertia
from .scalars import (
    GaussianRational,
    ParseError,
    Rational,
    format_rational,
    parse_rational,
    render_decimal,
)

__all__ = [
    "ALL_REALS",
    "DEFAULT_WIDTH",
    "Fraction",
    "GaussianRational",
    "IsolatingInterval",
    "MINUS_INF",
    "NEGATIVE",
    "PLUS_INF",
    "POSITIVE",
    "ParseError",
    "PolyQ",
    "Rational",
    "ZeroDenominator",
    "ZeroPolynomial",
    "binom",
    "congruence_diagonalize",
    "inertia",
    "count_roots",
    "format_rational",
    "isolate_real_roots",
    "parse_rational",
    "poly_arith",
    "rational_function_limit",
    "render_decimal",
    "sturm_sequence",
]
