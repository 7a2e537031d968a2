import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from symchern.exact import (
    ALL_REALS,
    NEGATIVE,
    POSITIVE,
    GaussianRational,
    IsolatingInterval,
    ParseError,
    PolyQ,
    ZeroDenominator,
    ZeroPolynomial,
    binom,
    congruence_diagonalize,
    count_roots,
    inertia,
    isolate_real_roots,
    parse_rational,
    poly_arith,
    rational_function_limit,
    render_decimal,
    sturm_sequence,
)

t = PolyQ.t()
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(PolyQ)


# -- binomials -----------------------------------------------------------------


@pytest.mark.parametrize(
    "a, b, expected",
    [(4, 2, 6), (-1, 0, 0), (3, 5, 0), (0, 0, 0), (5, -1, 0), (9, 3, 84), (1, 0, 1), (1, 1, 1)],
)
def test_binom_convention(a, b, expected):
    assert binom(a, b) == expected


@given(st.integers(-3, 14), st.integers(-3, 14), st.integers(-3, 14))
def test_binom_trinomial_revision(a, b, c):
    if 0 <= b and 0 <= c and 0 < b + c <= a and a - b > 0:
        assert binom(a, b) * binom(a - b, c) == binom(a, b + c) * binom(b + c, b)


def test_binom_big_integers_are_exact():
    assert binom(200, 100) == math.comb(200, 100)
    assert binom(200, 100) > 2**190


# -- scalars ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("5/4", Fraction(5, 4)), ("-1", Fraction(-1)), ("0.25", Fraction(1, 4)),
     ("0.1", Fraction(1, 10)), ("1e-9", Fraction(1, 10**9)), (" -6/4 ", Fraction(-3, 2))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "1.2.3", "pi"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(rationals)
def test_normal_form_idempotent(x):
    y = Fraction(x.numerator, x.denominator)
    assert y.denominator > 0
    assert math.gcd(y.numerator, y.denominator) == 1
    assert Fraction(y) == y


def test_render_decimal():
    assert render_decimal(Fraction(2, 3)) == "0.666667"
    assert render_decimal(Fraction(-27, 45), 3) == "-0.6"
    assert render_decimal(Fraction(1, 7), 3) == "0.143"
    assert render_decimal(Fraction(5)) == "5"


@given(rationals, rationals, rationals, rationals)
def test_gaussian_field_axioms(a, b, c, d):
    z, w = GaussianRational(a, b), GaussianRational(c, d)
    assert z.conjugate().conjugate() == z
    n = z * z.conjugate()
    assert n.im == 0 and n.re >= 0 and n.re == z.abs2()
    assert (z * w).conjugate() == z.conjugate() * w.conjugate()
    if w:
        assert (z / w) * w == z


# -- polynomials ----------------------------------------------------------------


def test_poly_arith_examples():
    one_t = PolyQ([1, 1])
    assert poly_arith(one_t, one_t, "mul") == PolyQ([1, 2, 1])
    q = PolyQ([Fraction(5, 4), 0, -1])
    assert poly_arith(q, q, "sub").is_zero
    assert poly_arith(q, q, "sub").degree == -1
    # (1 + t^2) * 9/4 - (1 + t^2) * 1 expanded by hand: 5/4 + 5/4 t^2
    lhs = (1 + t * t) * Fraction(9, 4) - (1 + t * t) * 1
    assert lhs == PolyQ([Fraction(5, 4), 0, Fraction(5, 4)])


@given(polys, polys)
def test_degree_of_product(p, q):
    r = p * q
    if p.is_zero or q.is_zero:
        assert r.is_zero
    else:
        assert r.degree == p.degree + q.degree


@given(polys, polys, rationals)
def test_arith_agrees_with_evaluation(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(polys, polys)
def test_divmod(p, q):
    if q.is_zero:
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(polys)
def test_squarefree_part_matches_sympy(p):
    if p.degree <= 0:
        return
    x = sympy.Symbol("x")
    ref = sympy.Poly(list(reversed(p.coeffs)), x, domain="QQ").sqf_part().monic()
    ours = p.squarefree_part()
    assert [Fraction(int(c.p), int(c.q)) for c in reversed(ref.all_coeffs())] == list(ours.coeffs)


# -- root isolation -------------------------------------------------------------


def test_sqrt2_intervals():
    ivs = isolate_real_roots(t * t - 2)
    assert len(ivs) == 2
    neg, pos = ivs
    # sign evaluation at integer points brackets the roots in [-2,-1] and [1,2]
    assert (t * t - 2).sign_at(-2) > 0 > (t * t - 2).sign_at(-1)
    assert -2 <= neg.lo and neg.hi <= -1 or neg.refine(Fraction(1, 4)).hi <= -1
    r = pos.refine(Fraction(1, 2**20))
    assert 1 <= r.lo and r.hi <= 2
    assert r.lo**2 < 2 <= r.hi**2


def test_no_real_roots():
    assert isolate_real_roots(t * t + 1) == []


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        isolate_real_roots(PolyQ())


def _bisection_oracle(f, lo, hi, width):
    # plain sign bisection, independent of Sturm sequences
    lo, hi = Fraction(lo), Fraction(hi)
    assert f(lo) * f(hi) < 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return lo, hi


def test_sqrt5_over_2_refinement():
    p = PolyQ([Fraction(5, 4), 0, -1])
    (iv,) = isolate_real_roots(p, POSITIVE)
    r = iv.refine(Fraction(1, 10**9))
    assert r.width <= Fraction(1, 10**9)
    assert Fraction("1.118033") <= r.lo and r.hi <= Fraction("1.118035")
    lo, hi = _bisection_oracle(p, 1, 2, Fraction(1, 10**9))
    assert max(lo, r.lo) <= min(hi, r.hi)  # the two enclosures overlap
    assert r.certify()


def test_domains():
    p = t * (t - 1) * (t + 2) * (t - Fraction(1, 3))
    assert len(isolate_real_roots(p, ALL_REALS)) == 4
    pos = isolate_real_roots(p, POSITIVE)
    neg = isolate_real_roots(p, NEGATIVE)
    assert len(pos) == 2 and len(neg) == 1
    assert all(iv.lo >= 0 for iv in pos)
    assert neg[0].contains(Fraction(-2))


def test_exact_rational_root_refines():
    p = (t - Fraction(1, 3)) * (t * t - 3)
    ivs = isolate_real_roots(p)
    hits = [iv.refine(Fraction(1, 10**6)) for iv in ivs]
    assert any(h.contains(Fraction(1, 3)) for h in hits)
    assert all(h.width <= Fraction(1, 10**6) and h.certify() for h in hits)


def test_multiple_roots_counted_once():
    p = (t - 1) ** 3 * (t + 1) ** 2
    assert len(isolate_real_roots(p)) == 2


@settings(max_examples=60, deadline=None)
@given(polys)
def test_isolation_matches_sympy(p):
    if p.degree <= 0:
        return
    x = sympy.Symbol("x")
    ref = sympy.Poly(list(reversed(p.coeffs)), x, domain="QQ").intervals()
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(ref)
    for iv in ivs:
        assert iv.certify()
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    # the Sturm count over a bracket of all roots equals the number of intervals
    chain = sturm_sequence(p)
    big = 1 + sum(abs(c) for c in p.coeffs) / abs(p.leading_coefficient)
    assert count_roots(chain, -big, big) == len(ivs)


def test_interval_invariants():
    with pytest.raises(ValueError):
        IsolatingInterval(Fraction(1), Fraction(1), t)


# -- limits ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "num, den, direction, expected",
    [
        (PolyQ([1, 0, 0, 0, 1]), PolyQ([0, 0, 1]), "+inf", math.inf),
        (PolyQ([0, 1, 3]), PolyQ([0, 0, 6]), "+inf", Fraction(1, 2)),
        (PolyQ([0, 1, 3]), PolyQ([0, 0, 6]), "-inf", Fraction(1, 2)),
        (PolyQ([1, 0, 1]), PolyQ([1]), "+inf", math.inf),
        (PolyQ([0, 1]), PolyQ([1]), "-inf", -math.inf),
        (PolyQ([1]), PolyQ([0, 1]), "+inf", Fraction(0)),
        (PolyQ([0, 0, -2, 1]), PolyQ([0, 4]), "-inf", math.inf),
        (PolyQ([3, 1]), PolyQ([6, 5]), "0+", Fraction(1, 2)),
        (PolyQ([0, 1]), PolyQ([0, 0, 1]), "0+", math.inf),
    ],
)
def test_rational_function_limit(num, den, direction, expected):
    assert rational_function_limit(num, den, direction) == expected


def test_limit_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational_function_limit(t, PolyQ(), "+inf")


@settings(max_examples=80)
@given(polys, polys)
def test_limit_matches_sympy(p, q):
    if q.is_zero:
        return
    x = sympy.Symbol("x")
    ps = sum(int(c) * x**k for k, c in enumerate(p.coeffs))
    qs = sum(int(c) * x**k for k, c in enumerate(q.coeffs))
    for direction, target in (("+inf", sympy.oo), ("-inf", -sympy.oo)):
        ref = sympy.limit(ps / qs, x, target)
        ours = rational_function_limit(p, q, direction)
        if ref is sympy.oo:
            assert ours == math.inf
        elif ref is -sympy.oo:
            assert ours == -math.inf
        else:
            assert ours == Fraction(int(ref.p), int(ref.q))


@given(polys, polys)
def test_finite_limit_approached_monotonically(p, q):
    if q.is_zero or p.degree > q.degree:
        return
    L = rational_function_limit(p, q, "+inf")
    errs = []
    for k in range(3, 7):
        x = Fraction(10**k)
        if q(x) == 0:
            return
        errs.append(abs(p(x) / q(x) - L))
    assert all(b <= a for a, b in zip(errs, errs[1:]))


# -- congruence diagonalization ----------------------------------------------------


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _transpose(a):
    return [list(r) for r in zip(*a)]


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[0, 1], [1, 0]], (1, 1, 0)),
        ([[0, 0], [0, 0]], (0, 0, 2)),
        ([[1, 2], [2, 4]], (1, 0, 1)),
        ([[2, 0, 0], [0, -3, 0], [0, 0, 0]], (1, 1, 1)),
        ([[0, 1, 1], [1, 0, 1], [1, 1, 0]], (1, 2, 0)),
    ],
)
def test_inertia_small(m, expected):
    assert inertia(m) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda k: st.lists(st.integers(-3, 3), min_size=k * k, max_size=k * k)))
def test_congruence_is_exact(entries):
    import numpy as np

    k = int(round(len(entries) ** 0.5))
    a = [[Fraction(entries[i * k + j]) for j in range(k)] for i in range(k)]
    m = [[a[i][j] + a[j][i] for j in range(k)] for i in range(k)]
    p, d = congruence_diagonalize(m)
    lhs = _mul(_mul(p, m), _transpose(p))
    assert lhs == [[d[i] if i == j else 0 for j in range(k)] for i in range(k)]
    det = sympy.Matrix(p).det()
    assert det != 0
    eig = np.linalg.eigvalsh(np.array(m, dtype=float))
    tol = 1e-9
    assert inertia(m) == (int((eig > tol).sum()), int((eig < -tol).sum()), int((abs(eig) <= tol).sum()))


@given(st.lists(rationals, min_size=0, max_size=7).map(PolyQ), rationals)
def test_sign_at_agrees_with_value(p, x):
    v = p(x)
    assert p.sign_at(x) == (v > 0) - (v < 0)


@given(st.lists(rationals, min_size=1, max_size=7).map(PolyQ))
def test_primitive_is_positive_integer_multiple(p):
    q = p.primitive()
    if p.is_zero:
        assert q.is_zero
        return
    assert all(c.denominator == 1 for c in q.coeffs)
    assert math.gcd(*(int(c) for c in q.coeffs)) == 1
    ratio = q.leading_coefficient / p.leading_coefficient
    assert ratio > 0 and q == p * ratio
