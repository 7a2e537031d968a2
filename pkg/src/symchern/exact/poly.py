"""Univariate polynomials over Q in the family parameter ``t``."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .scalars import format_rational, parse_rational

Number = Union[int, Fraction]
Infinity = float  # only ever math.inf or -math.inf

PLUS_INF = "+inf"
MINUS_INF = "-inf"


class ZeroPolynomial(ValueError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the vanishing convention used for product families.

    ``binom(a, b)`` is 0 whenever ``a <= 0``, ``b < 0`` or ``a < b``; in
    particular ``binom(0, 0) == 0``, unlike :func:`math.comb`.  Callers that
    need the ordinary value at ``(0, 0)`` use :func:`math.comb` directly.
    """
    if a <= 0 or b < 0 or a < b:
        return 0
    return math.comb(a, b)


class PolyQ:
    """Immutable polynomial ``c0 + c1 t + ... + cd t^d`` with Fraction coefficients.

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c", "_ints")

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)
        self._ints: tuple[int, ...] | None = None

    # -- construction -----------------------------------------------------
    @classmethod
    def constant(cls, value: Number) -> "PolyQ":
        return cls([value])

    @classmethod
    def monomial(cls, coeff: Number, degree: int) -> "PolyQ":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def t(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def parse(cls, coeffs: Sequence[str]) -> "PolyQ":
        return cls(parse_rational(c) for c in coeffs)

    # -- basic queries ----------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_even(self) -> bool:
        return all(c == 0 for c in self._c[1::2])

    def __call__(self, t: Number) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * t + c
        return acc

    def sign_at(self, t: Number) -> int:
        # homogeneous Horner on integer coefficients: q^d p(x/q) has the sign of p(x/q)
        t = Fraction(t)
        ints = self._integer_coeffs()
        if not ints:
            return 0
        x, q = t.numerator, t.denominator
        acc, qk = ints[-1], q
        for c in reversed(ints[:-1]):
            acc = acc * x + c * qk
            qk *= q
        return (acc > 0) - (acc < 0)

    def _integer_coeffs(self) -> tuple[int, ...]:
        if self._ints is None:
            den = math.lcm(*(c.denominator for c in self._c)) if self._c else 1
            ints = [c.numerator * (den // c.denominator) for c in self._c]
            g = math.gcd(*ints) if ints else 1
            self._ints = tuple(i // g for i in ints)
        return self._ints

    def primitive(self) -> "PolyQ":
        """The positive multiple of ``self`` with coprime integer coefficients."""
        return PolyQ(self._integer_coeffs())

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyQ([other])
        raise TypeError(other)

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        m = max(len(self._c), len(o._c))
        return PolyQ(self.coeff(k) + o.coeff(k) for k in range(m))

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self._c)

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        m = max(len(self._c), len(o._c))
        return PolyQ(self.coeff(k) - o.coeff(k) for k in range(m))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return PolyQ()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyQ":
        if k < 0:
            raise ValueError("negative power")
        result, base = PolyQ([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d, lc = other.degree, other.leading_coefficient
        if self.degree < d:
            return PolyQ(), self
        quo = [Fraction(0)] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            q = rem[k + d] / lc
            quo[k] = q
            if q:
                for j, c in enumerate(other._c):
                    rem[k + j] -= q * c
        return PolyQ(quo), PolyQ(rem[:d])

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return self.divmod(other)[0]

    def derivative(self) -> "PolyQ":
        return PolyQ(k * c for k, c in enumerate(self._c) if k)

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        lc = self.leading_coefficient
        return PolyQ(c / lc for c in self._c)

    def gcd(self, other: "PolyQ") -> "PolyQ":
        """Monic gcd (the zero polynomial if both are zero)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, (a % b).monic()
        return a.monic()

    def squarefree_part(self) -> "PolyQ":
        if self.degree <= 0:
            return self.monic()
        return (self // self.gcd(self.derivative())).monic()

    def reversed(self) -> "PolyQ":
        """Coefficients in reverse order, ``t^deg * p(1/t)``."""
        return PolyQ(reversed(self._c))

    def mirrored(self) -> "PolyQ":
        """``p(-t)``."""
        return PolyQ(c if k % 2 == 0 else -c for k, c in enumerate(self._c))

    # -- comparisons and display -----------------------------------------
    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"PolyQ([{', '.join(format_rational(c) for c in self._c)}])"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def poly_arith(p: PolyQ, q: PolyQ, op: str) -> PolyQ:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def rational_function_limit(
    numerator: PolyQ, denominator: PolyQ, direction: str = PLUS_INF
) -> Union[Fraction, Infinity]:
    """Limit of ``numerator / denominator`` as t goes to +inf, -inf or 0+.

    Returns a Fraction, or ``math.inf`` / ``-math.inf``.
    """
    if denominator.is_zero:
        raise ZeroDenominator("denominator is the zero polynomial")
    if direction == "0+":
        # t -> 1/s, s -> +inf; the degree shift moves onto one side
        dn, dd = numerator.degree, denominator.degree
        num, den = numerator.reversed(), denominator.reversed()
        if numerator.is_zero:
            return Fraction(0)
        shift = PolyQ.monomial(1, abs(dd - dn))
        if dd >= dn:
            num = num * shift
        else:
            den = den * shift
        return rational_function_limit(num, den, PLUS_INF)
    if direction not in (PLUS_INF, MINUS_INF):
        raise ValueError(f"unknown direction {direction!r}")
    if numerator.is_zero:
        return Fraction(0)
    dn, dd = numerator.degree, denominator.degree
    ratio = numerator.leading_coefficient / denominator.leading_coefficient
    if dn < dd:
        return Fraction(0)
    if dn == dd:
        return ratio
    sign = _sign(ratio)
    if direction == MINUS_INF and (dn - dd) % 2 == 1:
        sign = -sign
    return math.inf if sign > 0 else -math.inf
