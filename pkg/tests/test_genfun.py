from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from highercf.cf import evaluate
from highercf.exact import PreconditionError, multichoose
from highercf.genfun import (
    binomial_series,
    genfun,
    genfun_gap,
    limit_profile,
    r_near_integer,
    r_three_digit,
    r_two_digit,
)
from highercf.maps import cf_vector

F = Fraction


def test_genfun_examples():
    assert genfun(F(5, 3), 1).coefficients == (1, F(5, 3))
    assert genfun(F(12, 7), 2).coefficients == (1, F(47, 25), F(61, 25))
    assert genfun(2, 3).coefficients == (1, 2, 3, 4)
    assert genfun(2, 3)(F(1, 2)) == 1 + 1 + F(3, 4) + F(1, 2)
    assert str(genfun(2, 2)) == "1 + (2)*t + (3)*t^2"


def test_gap_at_zero():
    for x in (1, F(12, 7), F(9, 2)):
        for m in (1, 3, 6):
            assert genfun_gap(x, 0, m) == 0


def test_gap_x2():
    # tail sum_{i>3} (i+1)/2^i of the binomial series, summed far out
    tail = sum(F(i + 1, 2**i) for i in range(4, 400))
    assert abs(tail - F(3, 4)) < F(1, 10**100)
    assert genfun_gap(2, F(1, 2), 3) == F(3, 4)


def test_gap_decreases():
    gaps = [genfun_gap(F(12, 7), F(1, 2), m) for m in range(2, 13)]
    assert all(g > 0 for g in gaps)
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_gap_errors():
    with pytest.raises(PreconditionError):
        genfun_gap(2, 1, 3)
    with pytest.raises(PreconditionError):
        genfun_gap(F(1, 2), F(1, 2), 3)
    with pytest.raises(PreconditionError):
        binomial_series(F(-3, 2), 2)


@settings(max_examples=200)
@given(st.fractions(min_value=1, max_value=20, max_denominator=50),
       st.fractions(min_value=0, max_value=F(999, 1000), max_denominator=1000), st.integers(1, 10))
def test_domination(x, t, m):
    import math

    value = genfun(x, m)(t)
    assert 0 < value <= binomial_series(t, math.ceil(x))


def test_limit_profile_examples():
    for n in (1, 2, 5):
        rows = limit_profile(n, 2, 8)
        assert {row.value for row in rows} == {multichoose(n, 2)}
        assert rows[0].m == 2
    assert {row.value for row in limit_profile(F(7, 3), 0, 5)} == {1}
    rows = limit_profile(F(3, 2), 1, 6)
    assert [row.value for row in rows[:2]] == [F(3, 2), F(5, 3)]
    assert rows[0].target == 2
    # deeper m against the direct two-digit product [1, 2]
    assert [row.value for row in rows] == [r_two_digit(1, 2, 1, m) for m in range(1, 7)]


def test_limit_profile_errors():
    with pytest.raises(PreconditionError):
        limit_profile(0, 1, 4)
    with pytest.raises(PreconditionError):
        limit_profile(2, 3, 2)


def test_closed_forms():
    for a in range(1, 7):
        for b in range(1, 7):
            for m in range(1, 7):
                v2 = cf_vector(evaluate([a, b]), m)
                v3 = cf_vector(evaluate([a - 1, 1, b]), m)
                for i in range(m + 1):
                    assert v2[i] == r_two_digit(a, b, i, m)
                    assert v3[i] == r_three_digit(a, b, i, m)


def test_near_integer_formula():
    for c1 in range(1, 6):
        for a in range(1, 9):
            for m in range(1, 13):
                v = cf_vector(c1 + F(1, a), m)
                assert all(v[i] == r_near_integer(c1, a, i, m) for i in range(m + 1))
    # tends to multichoose(c1+1, i) as m grows
    assert abs(r_near_integer(2, 3, 2, 400) - multichoose(3, 2)) < F(1, 10)


@settings(max_examples=100)
@given(st.fractions(min_value=1, max_value=30, max_denominator=60).filter(lambda x: x.denominator > 1),
       st.integers(1, 8))
def test_sandwich(x, m):
    from highercf.cf import expand

    c1, c2 = expand(x).digits[:2]
    lo, mid, hi = cf_vector(evaluate([c1, c2 + 1]), m), cf_vector(x, m), cf_vector(evaluate([c1, c2]), m)
    assert all(lo[i] <= mid[i] <= hi[i] for i in range(m + 1))
