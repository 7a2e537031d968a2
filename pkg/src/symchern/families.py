"""One-parameter symplectic families and their obstruction thresholds.

Twist family: ``omega_t = omega + t Re(beta)`` on a Kähler manifold with
``c1 = -[omega]`` and a holomorphic (2,0)-form ``beta``.  It is described by
the integrals ``J_l = int omega^{n-2l} ^ beta^l ^ conj(beta)^l``.

Product family: ``omega_t = eta + t mu`` on ``M1^{2 n1} x M2^{2 n2}`` with
``c1(M1) = -[eta]``, ``c1(M2) = -[mu]``, described by
``E = int eta^{n1} ^ mu^{n2}`` and evaluated for ``t > 0``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import DomainViolation, InvalidSpec, ZeroDenominator
from .exact.poly import PLUS_INF, PolyQ, binom, rational_function_limit
from .exact.roots import (
    ALL_REALS,
    DEFAULT_WIDTH,
    POSITIVE,
    IsolatingInterval,
    isolate_real_roots,
)
from .invariants import (
    Einstein,
    Kaehler,
    SymplecticInvariants,
    constants_for,
)

Limit = Union[Fraction, float]

TWIST = "twist"
PRODUCT = "product"


@dataclass(frozen=True)
class TwistFamilySpec:
    n: int
    J: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "J", tuple(Fraction(x) for x in self.J))
        if self.n < 2:
            raise InvalidSpec(f"twist family needs n >= 2, got n = {self.n}")
        if len(self.J) != self.n // 2 + 1:
            raise InvalidSpec(
                f"J must have floor(n/2)+1 = {self.n // 2 + 1} entries, got {len(self.J)}"
            )
        if self.J[0] <= 0:
            raise InvalidSpec(f"J_0 is the volume and must be positive, got {self.J[0]}")
        for l, x in enumerate(self.J):
            if x < 0:
                raise InvalidSpec(f"J_{l} must be non-negative, got {x}")

    @classmethod
    def generic(cls, n: int, k: int) -> "TwistFamilySpec":
        """All ``J_l = 1`` up to the top nonzero power ``k``, zero beyond."""
        if not 0 <= k <= n // 2:
            raise InvalidSpec(f"k must lie in 0..{n // 2}, got {k}")
        return cls(n, tuple([1] * (k + 1) + [0] * (n // 2 - k)))

    @property
    def top_power(self) -> int:
        """Highest ``l`` with ``J_l != 0``."""
        return max(l for l, x in enumerate(self.J) if x != 0)


@dataclass(frozen=True)
class ProductFamilySpec:
    n1: int
    n2: int
    E: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "E", Fraction(self.E))
        if self.n1 < 1 or self.n2 < 1:
            raise InvalidSpec(f"n1 and n2 must be >= 1, got ({self.n1}, {self.n2})")
        if self.E <= 0:
            raise InvalidSpec(f"E must be positive, got {self.E}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def swapped(self) -> "ProductFamilySpec":
        """Factors exchanged; the ratio at ``t`` equals the original ratio at ``1/t``."""
        return ProductFamilySpec(self.n2, self.n1, self.E)


@dataclass(frozen=True)
class FamilyInvariants:
    n: int
    v: PolyQ
    a: PolyQ
    b: PolyQ
    kind: str = TWIST

    @property
    def domain(self) -> str:
        return ALL_REALS if self.kind == TWIST else POSITIVE

    def at(self, t) -> SymplecticInvariants:
        t = Fraction(t)
        return SymplecticInvariants(self.n, self.v(t), self.a(t), self.b(t))

    def ratio_polys(self) -> Tuple[PolyQ, PolyQ]:
        return self.b * self.v, self.a * self.a

    def ratio_at(self, t) -> Optional[Fraction]:
        num, den = self.ratio_polys()
        d = den(t)
        return None if d == 0 else num(t) / d


def twist_invariants(spec: TwistFamilySpec) -> FamilyInvariants:
    """``v``, ``a``, ``b`` as even polynomials in ``t``.

    The coefficient of ``t^{2l} J_l`` is ``C(m, 2l) C(2l, l) / 4^l`` with
    ``m = n, n-1, n-2`` respectively; ``a`` carries the sign of ``c1 = -[omega]``.
    """
    n = spec.n

    def series(m: int) -> PolyQ:
        coeffs = [Fraction(0)] * (2 * (m // 2) + 1)
        for l in range(m // 2 + 1):
            coeffs[2 * l] = math.comb(m, 2 * l) * math.comb(2 * l, l) * Fraction(1, 4**l) * spec.J[l]
        return PolyQ(coeffs)

    return FamilyInvariants(n, series(n), -series(n - 1), series(n - 2), TWIST)


def _term(coeff: int, exponent: int) -> PolyQ:
    if coeff == 0:
        return PolyQ()
    if exponent < 0:
        raise InvalidSpec(f"negative power t^{exponent} with nonzero coefficient")
    return PolyQ.monomial(coeff, exponent)


def product_invariants(spec: ProductFamilySpec) -> FamilyInvariants:
    """Binomial expansions of ``omega_t^n``, ``c1 ^ omega_t^{n-1}`` and ``c1^2 ^ omega_t^{n-2}``.

    Uses :func:`binom`, so every coefficient with top index ``<= 0`` vanishes.
    """
    n1, n2, n, E = spec.n1, spec.n2, spec.n, spec.E
    v = _term(binom(n, n1), n2) * E
    a = -(_term(binom(n - 1, n1 - 1), n2) + _term(binom(n - 1, n1), n2 - 1)) * E
    b = (
        _term(binom(n - 2, n1 - 2), n2)
        + _term(2 * binom(n - 2, n1 - 1), n2 - 1)
        + _term(binom(n - 2, n1), n2 - 2)
    ) * E
    return FamilyInvariants(n, v, a, b, PRODUCT)


def family_invariants(spec: Union[TwistFamilySpec, ProductFamilySpec]) -> FamilyInvariants:
    if isinstance(spec, TwistFamilySpec):
        return twist_invariants(spec)
    return product_invariants(spec)


# -- asymptotics ------------------------------------------------------------


def ratio_limit(inv: FamilyInvariants, direction: str = PLUS_INF) -> Limit:
    """``lim b(t) v(t) / a(t)^2`` in the given direction (``"+inf"``, ``"-inf"`` or ``"0+"``)."""
    if inv.a.is_zero:
        raise ZeroDenominator("a(t) is identically zero")
    num, den = inv.ratio_polys()
    return rational_function_limit(num, den, direction)


def twist_case(n: int, k: int) -> str:
    """``"i"``: n = 2m, k = m; ``"ii"``: n = 2m+1, k = m; ``"iii"``: k < m."""
    m = n // 2
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in 0..{m}")
    if k < m:
        return "iii"
    return "i" if n % 2 == 0 else "ii"


def twist_limit_closed_form(n: int, k: int) -> Limit:
    case = twist_case(n, k)
    if case == "i":
        return math.inf
    if case == "ii":
        return Fraction(0)
    return Fraction(n * (n - 2 * k - 1), (n - 1) * (n - 2 * k))


def product_limit_closed_form(n1: int, n2: int) -> Fraction:
    """Limit at ``t -> +inf`` of the product family: ``n (n1 - 1) / (n1 (n - 1))``."""
    n = n1 + n2
    return Fraction(n * (n1 - 1), n1 * (n - 1))


class Asymptotic(str, enum.Enum):
    OBSTRUCTED_INEQ1 = "ObstructedIneq1AtInfinity"
    OBSTRUCTED_INEQ2 = "ObstructedIneq2AtInfinity"
    NOT_OBSTRUCTED = "NotObstructedAtInfinity"


def classify_limit(limit: Limit, n: int, lebrun_k2: bool = False) -> Asymptotic:
    c = constants_for(n, lebrun_k2)
    if limit == math.inf or limit > c.k1:
        return Asymptotic.OBSTRUCTED_INEQ1
    if limit < c.k2:
        return Asymptotic.OBSTRUCTED_INEQ2
    return Asymptotic.NOT_OBSTRUCTED


def asymptotic_verdict(
    inv: FamilyInvariants, n: Optional[int] = None, direction: str = PLUS_INF, lebrun_k2: bool = False
) -> Asymptotic:
    return classify_limit(ratio_limit(inv, direction), inv.n if n is None else n, lebrun_k2)


# -- thresholds -------------------------------------------------------------


def _coprime_factors(polys: Sequence[PolyQ]) -> List[PolyQ]:
    """Pairwise coprime, square-free, monic factors whose roots are the roots of ``polys``."""
    basis: List[PolyQ] = []
    for p in polys:
        if p.is_zero or p.degree == 0:
            continue
        f = p.squarefree_part()
        split: List[PolyQ] = []
        for b in basis:
            g = f.gcd(b)
            if g.degree > 0:
                f = f // g
                split.append(g)
                rest = b // g
                if rest.degree > 0:
                    split.append(rest.monic())
            else:
                split.append(b)
        basis = split
        if f.degree > 0:
            basis.append(f.monic())
    return basis


def _separate(intervals: List[IsolatingInterval]) -> List[IsolatingInterval]:
    """Refine until the intervals are pairwise disjoint, then sort them."""
    ivs = sorted(intervals, key=lambda iv: iv.lo)
    i = 0
    while i + 1 < len(ivs):
        a, b = ivs[i], ivs[i + 1]
        if a.hi < b.lo:
            i += 1
            continue
        if a.width >= b.width:
            ivs[i] = a.refine(a.width / 2)
        else:
            ivs[i + 1] = b.refine(b.width / 2)
        ivs.sort(key=lambda iv: iv.lo)
        i = max(i - 1, 0)
    return ivs


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Region:
    """A root of the combined test polynomial or an open interval between two of them.

    ``left``/``right`` are ``None`` for an unbounded end, and for the ``t = 0``
    end of the positive domain (then ``left_bound`` is 0).
    """

    kind: str  # "point" or "open"
    left: Optional[IsolatingInterval]
    right: Optional[IsolatingInterval]
    sample: Optional[Fraction]
    signs: Dict[str, int]
    einstein: Einstein
    kaehler: Kaehler
    left_bound: Optional[Fraction] = None

    @property
    def root(self) -> Optional[IsolatingInterval]:
        return self.left if self.kind == "point" else None


@dataclass
class ThresholdReport:
    domain: str
    n: int
    polynomials: Dict[str, PolyQ]
    combined: PolyQ
    roots: List[IsolatingInterval]
    regions: List[Region]
    constants: Tuple[Fraction, Fraction] = field(default=(Fraction(0), Fraction(0)))

    def regions_where(self, einstein: Optional[Einstein] = None, kaehler: Optional[Kaehler] = None) -> List[Region]:
        out = []
        for r in self.regions:
            if einstein is not None and r.einstein != einstein:
                continue
            if kaehler is not None and r.kaehler != kaehler:
                continue
            out.append(r)
        return out

    def roots_of(self, name: str) -> List[IsolatingInterval]:
        """Isolating intervals (from :attr:`roots`) at which ``polynomials[name]`` vanishes."""
        return [r.root for r in self.regions if r.kind == "point" and r.signs[name] == 0]

    def tail(self) -> Region:
        return self.regions[-1]

    def head(self) -> Region:
        return self.regions[0]


TEST_POLYS = ("p1", "p2", "p9", "a", "v")


def obstruction_polynomials(inv: FamilyInvariants, lebrun_k2: bool = False) -> Dict[str, PolyQ]:
    """``p1 = k1 a^2 - b v``, ``p2 = b v - k2 a^2``, ``p9 = b v - a^2`` plus ``a`` and ``v``."""
    c = constants_for(inv.n, lebrun_k2)
    bv, a2 = inv.ratio_polys()
    return {
        "p1": a2 * c.k1 - bv,
        "p2": bv - a2 * c.k2,
        "p9": bv - a2,
        "a": inv.a,
        "v": inv.v,
    }


def verdict_from_signs(signs: Dict[str, int]) -> Tuple[Einstein, Kaehler]:
    if signs["a"] < 0:
        if signs["p1"] <= 0:
            e = Einstein.OBSTRUCTED_INEQ1
        elif signs["p2"] <= 0:
            e = Einstein.OBSTRUCTED_INEQ2
        else:
            e = Einstein.NOT_OBSTRUCTED
    else:
        e = Einstein.OBSTRUCTED_PART_A if signs["p9"] != 0 else Einstein.NOT_OBSTRUCTED
    k = Kaehler.OBSTRUCTED_APTE if signs["p9"] > 0 else Kaehler.NOT_OBSTRUCTED
    return e, k


def obstruction_thresholds(
    inv: FamilyInvariants, width: Fraction = DEFAULT_WIDTH, lebrun_k2: bool = False
) -> ThresholdReport:
    """Exact sign table of the test polynomials over the family's domain.

    The test polynomials are split into pairwise coprime square-free factors,
    whose roots are isolated, refined to ``width`` and separated.  Every root
    and every open gap between consecutive roots becomes a :class:`Region`
    with exact signs and verdicts.  Signs in a gap come from a rational sample
    point; at a root a polynomial vanishes iff the root's factor divides it.
    """
    domain = inv.domain
    if inv.v.is_zero or isolate_real_roots(inv.v, domain) or inv.v.sign_at(1) <= 0:
        raise DomainViolation("v(t) is not positive on the whole admissible domain")
    polys = obstruction_polynomials(inv, lebrun_k2)
    factors = _coprime_factors(list(polys.values()))
    combined = PolyQ([1])
    for f in factors:
        combined = combined * f
    # every factor has its own roots, so the separated intervals isolate the
    # roots of all test polynomials at once
    found = [iv.refine(width) for f in factors for iv in isolate_real_roots(f, domain)]
    roots = _separate(found)
    if domain == POSITIVE:
        while roots and roots[0].lo <= 0:
            roots[0] = roots[0].refine(roots[0].width / 2)

    def signs_at_point(x: Fraction) -> Dict[str, int]:
        return {k: p.sign_at(x) for k, p in polys.items()}

    def signs_at_root(iv: IsolatingInterval) -> Dict[str, int]:
        # p vanishes at the root iff the root's factor divides p; otherwise p has
        # no root at all in (lo, hi] and its sign at hi is its sign at the root
        out = {}
        for k, p in polys.items():
            if p.is_zero or (p % iv.polynomial).is_zero:
                out[k] = 0
            else:
                out[k] = p.sign_at(iv.hi)
        return out

    regions: List[Region] = []

    def add_open(left, right, sample, left_bound=None):
        sg = signs_at_point(sample)
        e, k = verdict_from_signs(sg)
        regions.append(Region("open", left, right, sample, sg, e, k, left_bound))

    start = Fraction(0) if domain == POSITIVE else None
    if not roots:
        sample = Fraction(1) if domain == POSITIVE else Fraction(0)
        add_open(None, None, sample, start)
    else:
        if domain == POSITIVE:
            add_open(None, roots[0], roots[0].lo / 2, start)
        else:
            add_open(None, roots[0], roots[0].lo - 1)
        for i, iv in enumerate(roots):
            sg = signs_at_root(iv)
            e, k = verdict_from_signs(sg)
            regions.append(Region("point", iv, iv, None, sg, e, k))
            if i + 1 < len(roots):
                add_open(iv, roots[i + 1], (iv.hi + roots[i + 1].lo) / 2)
        add_open(roots[-1], None, roots[-1].hi + 1)

    c = constants_for(inv.n, lebrun_k2)
    return ThresholdReport(domain, inv.n, polys, combined, roots, regions, (c.k1, c.k2))


# -- sweeps and sampling ------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    family: str
    params: Tuple[int, ...]
    case: str
    limit: Limit
    closed_form: Optional[Limit]
    verdict: Asymptotic
    condition: Optional[bool]

    @property
    def agrees(self) -> bool:
        ok = self.closed_form is None or self.limit == self.closed_form
        if self.condition is not None:
            ok = ok and (self.verdict == Asymptotic.OBSTRUCTED_INEQ2) == self.condition
        return ok


def twist_sweep(n_values: Sequence[int], lebrun_k2: bool = False) -> Iterator[SweepRow]:
    """Limit and verdict for every ``(n, k)``; case (iii) cells carry ``(25/9)(n-2k) < n``."""
    for n in n_values:
        for k in range(n // 2 + 1):
            inv = twist_invariants(TwistFamilySpec.generic(n, k))
            case = twist_case(n, k)
            limit = ratio_limit(inv)
            cond = Fraction(25, 9) * (n - 2 * k) < n if case == "iii" else None
            yield SweepRow(
                TWIST, (n, k), case, limit, twist_limit_closed_form(n, k),
                classify_limit(limit, n, lebrun_k2), cond,
            )


def product_sweep(
    n1_values: Sequence[int], n2_values: Sequence[int], lebrun_k2: bool = False
) -> Iterator[SweepRow]:
    """Limit at ``t -> +inf`` and verdict with the condition ``(25/9) n1 < n``."""
    for n1 in n1_values:
        for n2 in n2_values:
            spec = ProductFamilySpec(n1, n2)
            inv = product_invariants(spec)
            limit = ratio_limit(inv)
            n = spec.n
            yield SweepRow(
                PRODUCT, (n1, n2), "large-t", limit, product_limit_closed_form(n1, n2),
                classify_limit(limit, n, lebrun_k2),
                Fraction(25, 9) * n1 < n if n >= 3 else None,
            )


def sample_rows(inv: FamilyInvariants, t_min, t_max, steps: int) -> List[Dict[str, Optional[Fraction]]]:
    """Exact ``(t, v, a, b, b v / a^2)`` at ``steps`` evenly spaced rational points."""
    t_min, t_max = Fraction(t_min), Fraction(t_max)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if steps == 1:
        ts = [t_min]
    else:
        h = (t_max - t_min) / (steps - 1)
        ts = [t_min + i * h for i in range(steps)]
    rows = []
    for t in ts:
        rows.append({"t": t, "v": inv.v(t), "a": inv.a(t), "b": inv.b(t), "ratio": inv.ratio_at(t)})
    return rows
