from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadlam.angles import (Angle, BinaryExpansion, both_expansions, exact_period,
                            from_binary, make_angle, orbit_info, parse_angle, periodic_angles,
                            sigma, to_binary)

from oracles import long_division, period_of, value

rationals = st.builds(lambda q, p: Angle(p % q, q), st.integers(1, 5000), st.integers(0, 10**6))


def test_make_angle_reduces_and_wraps():
    assert make_angle(2, 6) == Fraction(1, 3)
    assert make_angle(7, 7) == 0
    assert make_angle(-1, 3) == Fraction(2, 3)
    with pytest.raises(ZeroDivisionError):
        make_angle(1, 0)


def test_text_form():
    assert str(Angle(0)) == "0"
    assert str(Angle(3, 7)) == "3/7"
    assert parse_angle("6/14") == Angle(3, 7)
    assert parse_angle("0") == 0


def test_sigma_examples():
    assert sigma(2, Angle(1, 3)) == Angle(2, 3)
    assert sigma(2, Angle(0)) == 0
    assert sigma(2, Angle(2, 7)) == Angle(4, 7)
    assert sigma(3, Angle(1, 2)) == Angle(1, 2)


def test_orbit_info_examples():
    info = orbit_info(2, Angle(1, 7))
    assert (info.preperiod_length, info.period_length) == (0, 3)
    assert info.orbit == (Angle(1, 7), Angle(2, 7), Angle(4, 7))
    info = orbit_info(2, Angle(1, 6))
    assert (info.preperiod_length, info.period_length) == (1, 2)
    assert info.orbit == (Angle(1, 6), Angle(1, 3), Angle(2, 3))
    info = orbit_info(2, Angle(0))
    assert (info.preperiod_length, info.period_length) == (0, 1)


def test_binary_examples():
    assert to_binary(Angle(1, 3)) == ("", "01")
    assert to_binary(Angle(3, 7)) == ("", "011")
    assert both_expansions(Angle(1, 2)) == (("1", "0"), ("0", "1"))
    assert both_expansions(Angle(1, 3)) == (("", "01"),)


def test_periodic_angles():
    assert periodic_angles(1) == [0]
    assert periodic_angles(2) == [Angle(1, 3), Angle(2, 3)]
    assert periodic_angles(3) == [Angle(k, 7) for k in range(1, 7)]


def test_binary_matches_long_division_exhaustively():
    for q in range(1, 10001):
        for p in (1, q // 3, q // 2 + 1, q - 1):
            a = make_angle(p, q)
            e = to_binary(a)
            assert e == long_division(a.numerator, a.denominator)
            assert from_binary(e) == a


def test_round_trip_small_denominators_all_numerators():
    for q in range(1, 300):
        for p in range(q):
            a = make_angle(p, q)
            assert from_binary(to_binary(a)) == a


@given(rationals)
def test_orbit_info_invariants(a):
    info = orbit_info(2, a)
    for x, y in zip(info.orbit, info.orbit[1:]):
        assert sigma(2, x) == y
    k, n = info.preperiod_length, info.period_length
    assert sigma(2, info.orbit[-1]) == info.orbit[k]
    if a.denominator % 2:
        assert k == 0
        assert n == period_of(a)
        assert exact_period(a) == n
    else:
        assert exact_period(a) is None


@given(rationals)
def test_shift_is_doubling(a):
    e = to_binary(a)
    assert from_binary(e.shift()) == sigma(2, a)
    assert value(*e) == a


@given(rationals)
def test_both_expansions_have_same_value(a):
    es = both_expansions(a)
    assert len(es) == (2 if a.is_dyadic else 1)
    for e in es:
        assert from_binary(e) == a


@given(st.text("01", max_size=12), st.text("01", min_size=1, max_size=8))
def test_canonical_form_is_shortest(pre, per):
    e = BinaryExpansion(pre, per)
    c = e.canonical()
    assert from_binary(c) == from_binary(e)
    assert len(c.preperiod) <= len(pre) + 1
    n = len(c.period)
    assert all(c.period != c.period[k:] + c.period[:k] for k in range(1, n) if n % k == 0)
    assert c.digits(40) == e.digits(40) or c.period == "0"
