"""Exit criteria: one test per criterion, each printing a PASS/FAIL line."""

import io
import json
import math
import time
from contextlib import contextmanager
from fractions import Fraction

import mpmath

from conftest import ACCEPTANCE_LINES
from highercf.cf import Named, convergents, evaluate
from highercf.cli import main
from highercf.exact import parse_rational
from highercf.genfun import genfun_gap, limit_profile, r_three_digit, r_two_digit
from highercf.inverse import invert
from highercf.lambdas import cf_product, lambda_matrix
from highercf.maps import cf_vector, enclose, r
from highercf.verify import SplitMix64, run_suite

F = Fraction


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield start
        status = "PASS"
    finally:
        ACCEPTANCE_LINES.append(f"criterion {number}: {status}  {title}  ({time.perf_counter() - start:.2f}s)")
        print(ACCEPTANCE_LINES[-1])


def cli(*argv):
    out = io.StringIO()
    status = main(list(argv), stdout=out, stderr=io.StringIO())
    return status, out.getvalue()


def test_1_worked_example():
    with criterion(1, "CF_2(12/7) and its matrix product") as start:
        status, out = cli("eval", "--x", "12/7", "--m", "2", "--format", "json")
        assert status == 0
        assert [d["value"] for d in json.loads(out)["r"]] == ["61/25", "47/25", "1/1"]
        status, out = cli("matrix", "--x", "12/7", "--m", "2", "--format", "json")
        assert json.loads(out) == [[61, 36, 14], [47, 28, 11], [25, 15, 6]]
        assert time.perf_counter() - start < 0.1


def test_2_negative_extension():
    with criterion(2, "r_{i,2}(-4/7) and Lambda_2(-1)Lambda_2(2)Lambda_2(3)"):
        status, out = cli("eval", "--x", "-4/7", "--m", "2", "--format", "json")
        values = {d["i"]: parse_rational(d["value"]) for d in json.loads(out)["r"]}
        assert status == 0 and values[2] == F(-9, 25) and values[1] == F(-2, 5)
        assert cf_product([-1, 2, 3], 2) == ((-9, -4, -1), (-10, -4, -1), (25, 11, 3))


def test_3_printed_matrices():
    with criterion(3, "Lambda_2(0), Lambda_2(-4), Lambda_3(-3)"):
        assert lambda_matrix(2, 0) == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
        assert lambda_matrix(2, -4) == ((6, -4, 1), (-4, 1, 0), (1, 0, 0))
        assert lambda_matrix(3, -3) == ((-1, 3, -3, 1), (3, -3, 1, 0), (-3, 1, 0, 0), (1, 0, 0, 0))
        status, out = cli("matrix", "--a", "-4", "--m", "2", "--format", "json")
        assert json.loads(out) == [[6, -4, 1], [-4, 1, 0], [1, 0, 0]]


def _golden_oracle():
    """4cos^2(pi/7) - 1 two ways: 50-digit cosine and the cubic it satisfies."""
    mpmath.mp.dps = 50
    by_cos = 4 * mpmath.cos(mpmath.pi / 7) ** 2 - 1
    # 2cos(2pi/7) is a root of c^3 + c^2 - 2c - 1, and the target equals that plus 1
    cubic = lambda s: (s - 1) ** 3 + (s - 1) ** 2 - 2 * (s - 1) - 1
    by_root = mpmath.findroot(cubic, mpmath.mpf("2.25"))
    assert abs(by_cos - by_root) < mpmath.mpf(10) ** -45
    return by_cos, cubic


def test_4_golden_ratio():
    with criterion(4, "phi convergent sequence and enclosure of 4cos^2(pi/7)-1"):
        seq = [r(c.value, 2, 2) for c in convergents(Named("phi"), 7)[1:7]]
        assert seq == [3, 2, F(14, 6), F(31, 14), F(70, 31), F(157, 70)]
        target, cubic = _golden_oracle()
        start = time.perf_counter()
        status, out = cli("enclose", "--x", "phi", "--i", "2", "--m", "2", "--eps", "1e-9", "--format", "json")
        elapsed = time.perf_counter() - start
        data = json.loads(out)
        lo, hi = parse_rational(data["lo"]["value"]), parse_rational(data["hi"]["value"])
        assert status == 0 and hi - lo <= F(1, 10**9)
        mp_lo = mpmath.mpf(lo.numerator) / lo.denominator
        mp_hi = mpmath.mpf(hi.numerator) / hi.denominator
        assert mp_lo - mpmath.mpf(10) ** -9 <= target <= mp_hi + mpmath.mpf(10) ** -9
        assert mp_lo <= target <= mp_hi
        # exact certificate: the cubic changes sign on [lo, hi]
        assert cubic(lo) * cubic(hi) < 0
        assert elapsed < 1


def test_5_monotonicity_suite():
    with criterion(5, "monotonicity, 1000 seeded pairs, 1 <= i <= m <= 5") as start:
        rng = SplitMix64(20240501)
        checked = 0
        for _ in range(1000):
            while True:
                x, y = rng.rational(0, 100), rng.rational(0, 100)
                if 0 < x < y or 0 < y < x:
                    break
            x, y = min(x, y), max(x, y)
            for m in range(1, 6):
                vx, vy = cf_vector(x, m), cf_vector(y, m)
                for i in range(1, m + 1):
                    assert vx[i] < vy[i], (x, y, i, m)
                    checked += 1
        assert checked == 15000
        report = run_suite("monotonicity", samples=1000, seed=42)
        assert report.passed
        assert time.perf_counter() - start < 30


def test_6_inequality_suites():
    with criterion(6, "ratio/value bounds, ratio monotonicity, floor separation, 500 samples each"):
        report = run_suite("bounds", samples=500, seed=42)
        names = {p.name: p for p in report.properties}
        for name in ("ratio_bounds_floor", "value_bounds_multichoose", "consecutive_ratio_increasing", "floor_separation"):
            assert names[name].samples == 500 and names[name].passed, names[name]


def test_7_identity_suites():
    with criterion(7, "shift, reciprocal, two-definition and Lambda identities"):
        ident = run_suite("identities", samples=500, seed=42)
        lam = run_suite("lambda", samples=500, seed=42)
        assert ident.passed and lam.passed
        names = {p.name for p in ident.properties + lam.properties}
        assert {
            "shift_up_identity", "shift_down_identity", "reciprocal_identity", "two_definitions_agree_below_1",
            "lambda_equals_R^aW_and_WL^a", "lambda_negative_step_is_R_inverse", "R_lambda0_equals_lambda1",
            "lambda_unimodular",
        } <= names


def test_8_inverse_round_trip():
    with criterion(8, "inverse round trip, 100 seeded y in [0, 50], 1 <= i <= m <= 4") as start:
        eps = F(1, 10**9)
        rng = SplitMix64(8)
        ys = [rng.rational(0, 50, max_den=1000) for _ in range(100)]
        for y in ys:
            for m in range(1, 5):
                for i in range(1, m + 1):
                    res = invert(y, i, m, eps)
                    assert abs(r(res.x_hat, i, m) - y) <= eps, (y, i, m)
        res = invert(F(61, 25), 2, 2, eps)
        assert abs(res.x_hat - F(12, 7)) < F(1, 10**6)
        assert time.perf_counter() - start < 60


# smallest m from which |r_{1,m}(3/2) - 2| < 0.05 holds, found by running the profile
M_LIMIT_3_2 = 20
# smallest m with (1-t)^-2 - F_m(12/7, 1/2) < 0.05, found the same way
M_GAP_12_7 = 12


def test_9_asymptotics():
    with criterion(9, f"limit profile of r_(1,m)(3/2) within 0.05 of 2 from m={M_LIMIT_3_2}; closed forms"):
        rows = limit_profile(F(3, 2), 1, 64)
        assert rows[0].target == 2
        close = {row.m: abs(row.value - 2) < F(5, 100) for row in rows}
        assert all(close[m] for m in range(M_LIMIT_3_2, 65))
        assert not close[M_LIMIT_3_2 - 1]
        for a in range(1, 7):
            for b in range(1, 7):
                for m in range(1, 7):
                    v2 = cf_vector(evaluate([a, b]), m)
                    v3 = cf_vector(evaluate([a - 1, 1, b]), m)
                    for i in range(m + 1):
                        assert v2[i] == r_two_digit(a, b, i, m)
                        assert v3[i] == r_three_digit(a, b, i, m)


def test_10_generating_function():
    with criterion(10, f"gap (1-t)^-2 - F_m(12/7, 1/2) decreasing, < 0.05 at m={M_GAP_12_7}; x=2 gap 3/4"):
        gaps = {m: genfun_gap(F(12, 7), F(1, 2), m) for m in range(2, 13)}
        assert math.ceil(F(12, 7)) == 2
        assert all(g > 0 for g in gaps.values())
        assert all(gaps[m] > gaps[m + 1] for m in range(2, 12))
        assert gaps[M_GAP_12_7] < F(5, 100) <= gaps[M_GAP_12_7 - 1]
        assert genfun_gap(2, F(1, 2), 3) == F(3, 4)
