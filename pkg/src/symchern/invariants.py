"""Obstruction verdicts from the three pairing numbers of a symplectic manifold.

For a compact symplectic ``(M^{2n}, omega)`` write

* ``v = [omega]^n (M)``,
* ``a = (c1 . [omega]^{n-1})(M)``,
* ``b = (c1^2 . [omega]^{n-2})(M)``.

A compatible Einstein metric forces ``c1`` to be a non-negative multiple of
``[omega]`` when ``a >= 0``, and when ``a < 0`` forces
``k2 a^2 < b v < k1 a^2``.  A compatible Kähler metric forces ``b v <= a^2``.
All comparisons here are exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import DimensionTooSmall, NonPositiveVolume

LEBRUN_K2 = Fraction(3, 4)


class Einstein(str, enum.Enum):
    OBSTRUCTED_INEQ1 = "ObstructedIneq1"
    OBSTRUCTED_INEQ2 = "ObstructedIneq2"
    OBSTRUCTED_PART_A = "ObstructedPartA"
    NOT_OBSTRUCTED = "NotObstructed"


class Kaehler(str, enum.Enum):
    OBSTRUCTED_APTE = "ObstructedApte"
    NOT_OBSTRUCTED = "NotObstructed"


@dataclass(frozen=True)
class Constants:
    k1: Fraction
    k2: Fraction
    scalar_bound: Fraction


def constants_for(n: int, lebrun_k2: bool = False) -> Constants:
    """Constants for real dimension ``2n``.

    ``lebrun_k2`` swaps in ``k2 = 3/4`` in real dimension 4; it has no effect
    otherwise.
    """
    if n < 2:
        raise DimensionTooSmall(f"need n >= 2, got n = {n}")
    if n == 2:
        k2 = LEBRUN_K2 if lebrun_k2 else Fraction(2, 3)
        return Constants(Fraction(9, 4), k2, Fraction(3, 2))
    k1 = Fraction(25, 9)
    return Constants(k1, (n - k1) / (n - 1), Fraction(5, 3))


@dataclass(frozen=True)
class SymplecticInvariants:
    n: int
    v: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DimensionTooSmall(f"need n >= 2, got n = {self.n}")
        for name in ("v", "a", "b"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def rescaled(self, lam: Fraction) -> "SymplecticInvariants":
        """Pairings of ``lam * omega``."""
        n = self.n
        return SymplecticInvariants(n, lam**n * self.v, lam ** (n - 1) * self.a, lam ** (n - 2) * self.b)

    @property
    def product(self) -> Fraction:
        return self.b * self.v


@dataclass(frozen=True)
class Verdict:
    einstein: Einstein
    kaehler: Kaehler
    details: Dict[str, Fraction] = field(default_factory=dict)


def _require_volume(inv: SymplecticInvariants) -> None:
    if inv.v <= 0:
        raise NonPositiveVolume(f"[omega]^n must be positive, got {inv.v}")


def inequality_sides(inv: SymplecticInvariants, lebrun_k2: bool = False) -> Dict[str, Fraction]:
    c = constants_for(inv.n, lebrun_k2)
    a2 = inv.a * inv.a
    return {
        "bv": inv.b * inv.v,
        "a2": a2,
        "k1a2": c.k1 * a2,
        "k2a2": c.k2 * a2,
        "k1": c.k1,
        "k2": c.k2,
    }


def check_einstein_obstruction(inv: SymplecticInvariants, lebrun_k2: bool = False) -> Einstein:
    """Einstein verdict.

    With ``a >= 0`` only a Kähler-Einstein metric with ``c1`` in ``R_+[omega]``
    is possible; its pairings satisfy ``b v = a^2``, so any other value
    obstructs.  This is a necessary-condition test: it certifies
    obstructions, never existence.  With ``a < 0`` the two strict
    inequalities are tested, equality counting as a violation.
    """
    _require_volume(inv)
    bv = inv.b * inv.v
    a2 = inv.a * inv.a
    if inv.a >= 0:
        return Einstein.NOT_OBSTRUCTED if bv == a2 else Einstein.OBSTRUCTED_PART_A
    c = constants_for(inv.n, lebrun_k2)
    if bv >= c.k1 * a2:
        return Einstein.OBSTRUCTED_INEQ1
    if bv <= c.k2 * a2:
        return Einstein.OBSTRUCTED_INEQ2
    return Einstein.NOT_OBSTRUCTED


def check_kaehler_obstruction(inv: SymplecticInvariants) -> Kaehler:
    _require_volume(inv)
    if inv.b * inv.v > inv.a * inv.a:
        return Kaehler.OBSTRUCTED_APTE
    return Kaehler.NOT_OBSTRUCTED


def verdict(inv: SymplecticInvariants, lebrun_k2: bool = False) -> Verdict:
    return Verdict(
        check_einstein_obstruction(inv, lebrun_k2),
        check_kaehler_obstruction(inv),
        inequality_sides(inv, lebrun_k2),
    )


@dataclass(frozen=True)
class ScalarWindow:
    """Half-open ``[lower, upper) * pi`` for the scalar curvature."""

    lower: Fraction
    upper: Fraction

    def contains(self, coefficient: Fraction) -> bool:
        return self.lower <= coefficient < self.upper

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return self.lower, self.upper


PAIRING_VOLUME = "pairing"
RIEMANNIAN_VOLUME = "riemannian"


def einstein_constant_window(
    inv: SymplecticInvariants, volume: str = PAIRING_VOLUME
) -> Optional[ScalarWindow]:
    """Admissible scalar curvature of a non-Kähler compatible Einstein metric.

    Returns ``None`` when ``a >= 0`` (no such metric).  Otherwise the window
    is ``[bound * a * 4 / ((n-1)! V), a * 4 / ((n-1)! V))`` in units of pi,
    where ``bound`` is 3/2 in real dimension 4 and 5/3 above.

    ``volume`` picks ``V``: ``"pairing"`` uses ``V = [omega]^n (M)``;
    ``"riemannian"`` uses the Riemannian volume ``[omega]^n (M) / n!``.
    """
    _require_volume(inv)
    if inv.a >= 0:
        return None
    if volume == PAIRING_VOLUME:
        vol = inv.v
    elif volume == RIEMANNIAN_VOLUME:
        vol = inv.v / math.factorial(inv.n)
    else:
        raise ValueError(f"unknown volume convention {volume!r}")
    c = constants_for(inv.n)
    upper = 4 * inv.a / (math.factorial(inv.n - 1) * vol)
    return ScalarWindow(c.scalar_bound * upper, upper)
