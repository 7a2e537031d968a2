"""Certified real root isolation by Sturm sequences.

All intervals are half-open ``(lo, hi]``.  For a square-free ``p`` with
Sturm chain ``S`` and sign-variation count ``V``, ``V(lo) - V(hi)`` is the
number of distinct roots in ``(lo, hi]`` for any ``lo < hi``, including when
either endpoint is itself a root.  That identity is the only thing the
isolation and refinement code relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence

from .poly import PolyQ, ZeroPolynomial
from .scalars import format_rational, render_decimal

ALL_REALS = "all-reals"
POSITIVE = "t>0"
NEGATIVE = "t<0"
DOMAINS = (ALL_REALS, POSITIVE, NEGATIVE)

DEFAULT_WIDTH = Fraction(1, 10**9)


def sturm_sequence(p: PolyQ) -> List[PolyQ]:
    """Canonical Sturm chain of the square-free part of ``p``."""
    if p.is_zero:
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    f = p.squarefree_part()
    # positive rescaling keeps every sign, and keeps the coefficients small
    chain = [f.primitive(), f.derivative().primitive()]
    while not chain[-1].is_zero:
        chain.append((-(chain[-2] % chain[-1])).primitive())
    return chain[:-1]


def sign_variations(chain: Sequence[PolyQ], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in chain) if s]
    return sum(1 for u, w in zip(signs, signs[1:]) if u != w)


def count_roots(chain: Sequence[PolyQ], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in ``(lo, hi]``."""
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(p: PolyQ) -> Fraction:
    """Every real root of ``p`` lies strictly inside ``(-B, B)``."""
    lc = abs(p.leading_coefficient)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class IsolatingInterval:
    """``(lo, hi]`` containing exactly one real root of ``polynomial``."""

    lo: Fraction
    hi: Fraction
    polynomial: PolyQ = field(compare=False)

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @cached_property
    def _chain(self) -> List[PolyQ]:
        return sturm_sequence(self.polynomial)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def certify(self) -> bool:
        return count_roots(self._chain, self.lo, self.hi) == 1

    def refine(self, width: Fraction = DEFAULT_WIDTH) -> "IsolatingInterval":
        """Bisect until ``hi - lo <= width``."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("refinement width must be positive")
        lo, hi, chain = self.lo, self.hi, self._chain
        f = chain[0]
        while hi - lo > width:
            if f.sign_at(hi) == 0:
                # exact rational root: shrink around it from the left
                lo = hi - width
                break
            mid = (lo + hi) / 2
            if count_roots(chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        out = IsolatingInterval(lo, hi, self.polynomial)
        out.__dict__["_chain"] = chain
        return out

    def exact_root(self) -> Optional[Fraction]:
        """The root itself when it happens to be the rational endpoint ``hi``."""
        return self.hi if self.polynomial(self.hi) == 0 else None

    def contains(self, x: Fraction) -> bool:
        return self.lo < x <= self.hi

    def describe(self, digits: int = 10) -> str:
        return (
            f"({render_decimal(self.lo, digits)}, {render_decimal(self.hi, digits)}]"
            f" exact ({format_rational(self.lo)}, {format_rational(self.hi)}]"
            f" root of {self.polynomial}"
        )


def isolate_real_roots(p: PolyQ, domain: str = ALL_REALS) -> List[IsolatingInterval]:
    """Isolate the distinct real roots of ``p`` lying in ``domain``, in increasing order."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    if domain not in DOMAINS:
        raise ValueError(f"unknown domain {domain!r}")
    if p.degree == 0:
        return []
    chain = sturm_sequence(p)
    bound = cauchy_bound(chain[0])
    if domain == ALL_REALS:
        lo, hi = -bound, bound
    elif domain == POSITIVE:
        lo, hi = Fraction(0), bound
    else:
        lo, hi = -bound, Fraction(0)

    found: List[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        k = count_roots(chain, a, b)
        if k == 0:
            continue
        if k == 1:
            found.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))

    found.sort()
    if domain == NEGATIVE and chain[0](0) == 0:
        # (lo, 0] also caught the root t = 0
        found = [iv for iv in found if iv[1] != 0]
    out = []
    for a, b in found:
        iv = IsolatingInterval(a, b, p)
        iv.__dict__["_chain"] = chain
        out.append(iv)
    return out
