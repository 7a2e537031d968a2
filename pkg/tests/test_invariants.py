from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from symchern.errors import DimensionTooSmall, NonPositiveVolume
from symchern.invariants import (
    Einstein,
    Kaehler,
    ScalarWindow,
    SymplecticInvariants,
    check_einstein_obstruction,
    check_kaehler_obstruction,
    constants_for,
    einstein_constant_window,
    inequality_sides,
    verdict,
)

Q = Fraction
rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)
positive = st.fractions(min_value=Q(1, 20), max_value=50, max_denominator=20)
dims = st.integers(2, 12)


def test_constants_examples():
    c = constants_for(2)
    assert (c.k1, c.k2, c.scalar_bound) == (Q(9, 4), Q(2, 3), Q(3, 2))
    c = constants_for(3)
    assert (c.k1, c.k2, c.scalar_bound) == (Q(25, 9), Q(1, 9), Q(5, 3))
    assert constants_for(9).k2 == Q(7, 9)
    assert constants_for(2, lebrun_k2=True).k2 == Q(3, 4)
    assert constants_for(5, lebrun_k2=True) == constants_for(5)


def test_constants_reject_small_n():
    with pytest.raises(DimensionTooSmall):
        constants_for(1)
    with pytest.raises(DimensionTooSmall):
        SymplecticInvariants(1, 1, -1, 1)


def test_constants_monotone():
    prev = None
    for n in range(3, 60):
        c = constants_for(n)
        assert c.k2 < 1 < c.k1
        if prev is not None:
            assert c.k2 > prev
        prev = c.k2
    assert 1 - constants_for(10**6).k2 < Q(1, 10**5)


@pytest.mark.parametrize(
    "n, v, a, b, einstein, kaehler",
    [
        (2, 5, -1, 1, Einstein.OBSTRUCTED_INEQ1, Kaehler.OBSTRUCTED_APTE),
        (2, 2, -1, 1, Einstein.NOT_OBSTRUCTED, Kaehler.OBSTRUCTED_APTE),
        (2, 1, 1, 1, Einstein.NOT_OBSTRUCTED, Kaehler.NOT_OBSTRUCTED),
        (3, 6, -6, 4, Einstein.NOT_OBSTRUCTED, Kaehler.NOT_OBSTRUCTED),
        (2, 1, -3, 1, Einstein.OBSTRUCTED_INEQ2, Kaehler.NOT_OBSTRUCTED),
        (2, 1, 2, 1, Einstein.OBSTRUCTED_PART_A, Kaehler.NOT_OBSTRUCTED),
        (2, 1, 0, 1, Einstein.OBSTRUCTED_PART_A, Kaehler.OBSTRUCTED_APTE),
        (2, 1, 0, 0, Einstein.NOT_OBSTRUCTED, Kaehler.NOT_OBSTRUCTED),
    ],
)
def test_verdict_examples(n, v, a, b, einstein, kaehler):
    inv = SymplecticInvariants(n, v, a, b)
    assert check_einstein_obstruction(inv) == einstein
    assert check_kaehler_obstruction(inv) == kaehler


def test_boundaries_count_as_violations():
    # b v = k1 a^2 exactly
    assert check_einstein_obstruction(SymplecticInvariants(2, 9, -2, 1)) == Einstein.OBSTRUCTED_INEQ1
    # b v = k2 a^2 exactly
    assert check_einstein_obstruction(SymplecticInvariants(2, 2, -3, 3)) == Einstein.OBSTRUCTED_INEQ2
    # b v = a^2 is allowed for the Kähler test
    assert check_kaehler_obstruction(SymplecticInvariants(3, 4, -2, 1)) == Kaehler.NOT_OBSTRUCTED


def test_lebrun_flag_moves_lower_threshold():
    inv = SymplecticInvariants(2, 1, -1, Q(7, 10))
    assert check_einstein_obstruction(inv) == Einstein.NOT_OBSTRUCTED
    assert check_einstein_obstruction(inv, lebrun_k2=True) == Einstein.OBSTRUCTED_INEQ2


def test_details_carry_all_sides():
    d = verdict(SymplecticInvariants(2, 5, -1, 1)).details
    assert d["bv"] == 5 and d["a2"] == 1
    assert d["k1a2"] == Q(9, 4) and d["k2a2"] == Q(2, 3)


def test_nonpositive_volume():
    for v in (0, -1):
        inv = SymplecticInvariants(2, v, -1, 1)
        with pytest.raises(NonPositiveVolume):
            check_einstein_obstruction(inv)
        with pytest.raises(NonPositiveVolume):
            check_kaehler_obstruction(inv)
        with pytest.raises(NonPositiveVolume):
            einstein_constant_window(inv)


def test_window_examples():
    assert einstein_constant_window(SymplecticInvariants(2, 2, -1, 1)) == ScalarWindow(Q(-3), Q(-2))
    assert einstein_constant_window(SymplecticInvariants(3, 1, -2, 1)) == ScalarWindow(Q(-20, 3), Q(-4))
    assert einstein_constant_window(SymplecticInvariants(3, 1, 0, 1)) is None
    assert einstein_constant_window(SymplecticInvariants(3, 1, 2, 1)) is None


def test_window_volume_conventions():
    inv = SymplecticInvariants(3, 6, -2, 1)
    pairing = einstein_constant_window(inv)
    riem = einstein_constant_window(inv, volume="riemannian")
    assert riem.lower == 6 * pairing.lower and riem.upper == 6 * pairing.upper
    with pytest.raises(ValueError):
        einstein_constant_window(inv, volume="other")


def test_window_half_open():
    w = einstein_constant_window(SymplecticInvariants(2, 2, -1, 1))
    assert w.contains(Q(-3)) and not w.contains(Q(-2)) and w.contains(Q(-5, 2))


@given(dims, positive, rats, rats, positive)
def test_scale_invariance(n, v, a, b, lam):
    inv = SymplecticInvariants(n, v, a, b)
    scaled = inv.rescaled(lam)
    assert check_einstein_obstruction(scaled) == check_einstein_obstruction(inv)
    assert check_kaehler_obstruction(scaled) == check_kaehler_obstruction(inv)


@given(dims, positive, rats, rats)
def test_exclusivity(n, v, a, b):
    assume(a < 0)
    inv = SymplecticInvariants(n, v, a, b)
    c = constants_for(n)
    bv, a2 = b * v, a * a
    e = check_einstein_obstruction(inv)
    assert (e == Einstein.OBSTRUCTED_INEQ1) == (bv >= c.k1 * a2)
    assert (e == Einstein.OBSTRUCTED_INEQ2) == (bv <= c.k2 * a2)
    if c.k2 * a2 < bv < c.k1 * a2:
        assert e == Einstein.NOT_OBSTRUCTED


@given(dims, positive, rats, rats)
def test_ineq1_implies_apte(n, v, a, b):
    inv = SymplecticInvariants(n, v, a, b)
    if check_einstein_obstruction(inv) == Einstein.OBSTRUCTED_INEQ1:
        assert check_kaehler_obstruction(inv) == Kaehler.OBSTRUCTED_APTE


@given(dims, positive, rats, rats)
def test_verdict_kind_matches_sign_of_a(n, v, a, b):
    e = check_einstein_obstruction(SymplecticInvariants(n, v, a, b))
    if a >= 0:
        assert e in (Einstein.OBSTRUCTED_PART_A, Einstein.NOT_OBSTRUCTED)
    else:
        assert e != Einstein.OBSTRUCTED_PART_A


@given(dims, positive, rats, rats)
def test_inequality_sides_consistent(n, v, a, b):
    d = inequality_sides(SymplecticInvariants(n, v, a, b))
    assert d["k1a2"] == d["k1"] * d["a2"] and d["k2a2"] == d["k2"] * d["a2"]
    assert d["bv"] == b * v
