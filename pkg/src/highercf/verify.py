"""Seeded property suites over every identity and inequality the maps satisfy.

Sampling uses SplitMix64 so a seed reproduces the same samples in any
language: ``state += 0x9E3779B97F4A7C15``, then
``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``, ``z ^ (z >> 31)``, all mod 2**64.
A bounded draw is ``next() % n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .cf import canonicalize, evaluate, expand
from .exact import binomial, multichoose
from .genfun import genfun, r_near_integer, r_three_digit, r_two_digit
from .lambdas import (
    check_ratio_reversal,
    determinant,
    first_column,
    generators,
    lambda_matrix,
    lemma_inequality,
    matmul,
    matpow,
    matvec,
    r_inverse,
)
from .maps import (
    check_ratio_bounds,
    check_value_bounds,
    cf_vector,
    r_via_shift,
    reciprocal_vector,
    shift_down,
    shift_up,
)

MASK64 = (1 << 64) - 1
SUITES = ("monotonicity", "bounds", "identities", "lambda", "genfun")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def rational(self, lo: int, hi: int, max_den: int = 64) -> Fraction:
        """Rational in ``[lo, hi)`` with denominator at most ``max_den``."""
        q = self.between(1, max_den)
        return Fraction(lo * q + self.below((hi - lo) * q), q)


@dataclass
class PropertyResult:
    name: str
    samples: int = 0
    failures: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.samples += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = detail()


@dataclass
class Report:
    suite: str
    seed: int
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def sorted(self) -> "Report":
        return Report(self.suite, self.seed, sorted(self.properties, key=lambda p: p.name))

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "properties": [
                {
                    "name": p.name,
                    "samples": p.samples,
                    "failures": p.failures,
                    "passed": p.passed,
                    "counterexample": p.counterexample,
                }
                for p in self.properties
            ],
        }


# --- sampling helpers ----------------------------------------------------------------


def _pair(rng: SplitMix64, lo: int, hi: int, low_open: bool = False) -> tuple[Fraction, Fraction]:
    """Distinct sorted rationals in ``[lo, hi]``; every other draw is a near pair."""
    while True:
        x = rng.rational(lo, hi)
        if rng.below(2):
            y = x + Fraction(1, rng.between(2, 10**6))
        else:
            y = rng.rational(lo, hi)
        x, y = min(x, y), max(x, y)
        if x != y and (x > lo or not low_open) and y <= hi:
            return x, y


def _noninteger(rng: SplitMix64, lo: int, hi: int) -> Fraction:
    while True:
        x = rng.rational(lo, hi)
        if x.denominator != 1 or rng.below(8) == 0:
            return x


# --- suites ------------------------------------------------------------------------------


def suite_monotonicity(samples: int, rng: SplitMix64, m_max: int = 5) -> list[PropertyResult]:
    inc = PropertyResult("r_increasing_on_positive_reals")
    top = PropertyResult("top_ratio_increasing_on_[1,inf)")
    for _ in range(samples):
        x, y = _pair(rng, 0, 100, low_open=True)
        for m in range(1, m_max + 1):
            vx, vy = cf_vector(x, m), cf_vector(y, m)
            for i in range(1, m + 1):
                inc.record(vx[i] < vy[i], lambda: f"x={x}, y={y}, i={i}, m={m}")
    for _ in range(samples):
        x, y = _pair(rng, 1, 100)
        for m in range(2, m_max + 1):
            vx, vy = cf_vector(x, m), cf_vector(y, m)
            for i in range(1, m):
                top.record(vx[m] / vx[i] < vy[m] / vy[i], lambda: f"x={x}, y={y}, i={i}, m={m}")
    return [inc, top]


def suite_bounds(samples: int, rng: SplitMix64, m_max: int = 5) -> list[PropertyResult]:
    ratio = PropertyResult("ratio_bounds_floor")
    value = PropertyResult("value_bounds_multichoose")
    lem4 = PropertyResult("consecutive_ratio_increasing")
    floor_sep = PropertyResult("floor_separation")
    for _ in range(samples):
        x = _noninteger(rng, 1, 100)
        m = rng.between(1, m_max)
        rep = check_ratio_bounds(x, m)
        ratio.record(rep.ok, lambda: f"x={x}, m={m}: {rep.failures[:1]}")
        rep2 = check_value_bounds(x, m)
        value.record(rep2.ok, lambda: f"x={x}, m={m}: {rep2.failures[:1]}")
    for _ in range(samples):
        x, y = _pair(rng, 1, 100)
        m = rng.between(1, m_max)
        vx, vy = cf_vector(x, m), cf_vector(y, m)
        bad = [i for i in range(1, m + 1) if not vx[i] / vx[i - 1] < vy[i] / vy[i - 1]]
        lem4.record(not bad, lambda: f"x={x}, y={y}, m={m}, i={bad[:1]}")
    for _ in range(samples):
        while True:
            x, y = rng.rational(1, 100), rng.rational(1, 100)
            if math.floor(x) != math.floor(y):
                break
        if math.floor(x) < math.floor(y):
            x, y = y, x
        m = rng.between(1, m_max)
        vx, vy = cf_vector(x, m), cf_vector(y, m)
        bad = [j for j in range(1, m + 1) if not vx[j] / vx[j - 1] > vy[j] / vy[j - 1]]
        floor_sep.record(not bad, lambda: f"x={x}, y={y}, m={m}, j={bad[:1]}")
    return [ratio, value, lem4, floor_sep]


def suite_identities(samples: int, rng: SplitMix64, m_max: int = 6) -> list[PropertyResult]:
    up = PropertyResult("shift_up_identity")
    down = PropertyResult("shift_down_identity")
    recip = PropertyResult("reciprocal_identity")
    equiv = PropertyResult("two_definitions_agree_below_1")
    alias = PropertyResult("representation_independent_first_column")
    for _ in range(samples):
        x = rng.rational(-20, 20)
        m = rng.between(1, m_max)
        v = cf_vector(x, m)
        up.record(cf_vector(x + 1, m) == shift_up(v), lambda: f"x={x}, m={m}")
        down.record(cf_vector(x - 1, m) == shift_down(v), lambda: f"x={x}, m={m}")
    for _ in range(samples):
        x = rng.rational(1, 100)
        m = rng.between(1, m_max)
        recip.record(
            cf_vector(1 / x, m) == reciprocal_vector(cf_vector(x, m)), lambda: f"x={x}, m={m}"
        )
    for _ in range(samples):
        x = rng.rational(-20, 1)
        m = rng.between(1, m_max)
        v = cf_vector(x, m)
        bad = [i for i in range(m + 1) if v[i] != r_via_shift(x, i, m)]
        equiv.record(not bad, lambda: f"x={x}, m={m}, i={bad[:1]}")
    for _ in range(samples):
        x = rng.rational(-20, 20)
        digits = list(expand(x).digits)
        if len(digits) >= 2 or digits[0] != 0:
            m = rng.between(1, m_max)
            alt = digits[:-1] + [digits[-1] - 1, 1]
            if len(alt) >= 2 and all(d >= 1 for d in alt[1:]):
                alias.record(
                    evaluate(alt) == x and canonicalize(alt).digits == tuple(digits)
                    and _proportional(first_column(alt, m), first_column(digits, m)),
                    lambda: f"x={x}, alt={alt}, m={m}",
                )
    return [up, down, recip, equiv, alias]


def _proportional(u, v) -> bool:
    return all(a * v[-1] == b * u[-1] for a, b in zip(u, v))


def suite_lambda(samples: int, rng: SplitMix64, m_max: int = 6) -> list[PropertyResult]:
    factor = PropertyResult("lambda_equals_R^aW_and_WL^a")
    neg = PropertyResult("lambda_negative_step_is_R_inverse")
    base = PropertyResult("R_lambda0_equals_lambda1")
    det = PropertyResult("lambda_unimodular")
    pascal = PropertyResult("pascal_recurrence")
    hockey = PropertyResult("hockey_stick")
    sign = PropertyResult("negative_multichoose_sign_pattern")
    lemma = PropertyResult("multichoose_cross_inequality")
    reversal = PropertyResult("lambda_reverses_ratio_order")
    parity = PropertyResult("iterated_reversal_parity")
    for m in range(1, m_max + 1):
        g = generators(m)
        Rinv = r_inverse(m)
        for a in range(0, 11):
            lam = lambda_matrix(m, a)
            factor.record(
                lam == matmul(matpow(g.R, a), g.W) == matmul(g.W, matpow(g.L, a)),
                lambda: f"m={m}, a={a}",
            )
        for c in range(0, 11):
            neg.record(
                lambda_matrix(m, -(c + 1)) == matmul(Rinv, lambda_matrix(m, -c)),
                lambda: f"m={m}, c={c}",
            )
        base.record(matmul(g.R, lambda_matrix(m, 0)) == lambda_matrix(m, 1), lambda: f"m={m}")
        for a in range(-10, 11):
            d = determinant(lambda_matrix(m, a))
            det.record(abs(d) == 1, lambda: f"m={m}, a={a}, det={d}")
        for a in range(1, 8):
            for i in range(1, m + 2):
                for k in range(1, m + 2):
                    for j in range(1, k):
                        lhs, rhs = lemma_inequality(a, m, i, j, k)
                        strict = a > 1 and j <= m + 2 - i and k <= m + 2 - i
                        lemma.record(
                            lhs > rhs if strict else lhs >= rhs,
                            lambda: f"a={a}, m={m}, i={i}, j={j}, k={k}",
                        )
    for n in range(-20, 21):
        for k in range(0, 21):
            if k >= 1:
                pascal.record(
                    binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k),
                    lambda: f"n={n}, k={k}",
                )
    for a in range(-10, 11):
        for s in range(0, 13):
            hockey.record(
                sum(multichoose(a, r) for r in range(s + 1)) == multichoose(a + 1, s),
                lambda: f"a={a}, s={s}",
            )
    for n in range(1, 21):
        for i in range(0, 21):
            sign.record(multichoose(-n, i) == (-1) ** i * binomial(n, i), lambda: f"n={n}, i={i}")
    for _ in range(samples):
        m = rng.between(1, 5)
        a = rng.between(1, 5)
        X, Y = _dominating_pair(rng, m)
        rep = check_ratio_reversal(X, Y, a, m)
        ok = rep.holds and (rep.strict_holds or not rep.strict_expected)
        reversal.record(ok, lambda: f"X={X}, Y={Y}, a={a}, m={m}")
    for _ in range(samples):
        m = rng.between(1, 5)
        n = rng.between(1, 6)
        digits = [rng.between(1, 5) for _ in range(n)]
        X, Y = _dominating_pair(rng, m)
        Xp, Yp = X, Y
        for c in reversed(digits):
            lam = lambda_matrix(m, c)
            Xp, Yp = matvec(lam, Xp), matvec(lam, Yp)
        first, second = (Xp, Yp) if n % 2 == 0 else (Yp, Xp)
        strict = X[0] * Y[1] > Y[0] * X[1]
        ok = all(
            (first[i] * second[i + 1] > second[i] * first[i + 1])
            if strict
            else (first[i] * second[i + 1] >= second[i] * first[i + 1])
            for i in range(m)
        )
        parity.record(ok, lambda: f"X={X}, Y={Y}, digits={digits}, m={m}")
    return [factor, neg, base, det, pascal, hockey, sign, lemma, reversal, parity]


def _dominating_pair(rng: SplitMix64, m: int):
    """Positive X, Y of length m+1 with ``x_i/x_{i+1} >= y_i/y_{i+1}``."""
    y_ratios = [Fraction(rng.between(1, 40), rng.between(1, 40)) for _ in range(m)]
    x_ratios = [r * (1 + Fraction(rng.below(4), rng.between(1, 8))) for r in y_ratios]

    def build(ratios):
        v = [Fraction(rng.between(1, 9), rng.between(1, 9))]
        for q in reversed(ratios):
            v.insert(0, v[0] * q)
        return tuple(v)

    return build(x_ratios), build(y_ratios)


def suite_genfun(samples: int, rng: SplitMix64, m_max: int = 12) -> list[PropertyResult]:
    two = PropertyResult("closed_form_[a,b]")
    three = PropertyResult("closed_form_[a-1,1,b]")
    near = PropertyResult("closed_form_c1+1/a")
    dom = PropertyResult("genfun_dominated_by_binomial_series")
    sandwich = PropertyResult("sandwich_between_two_digit_points")
    for a in range(1, 7):
        for b in range(1, 7):
            for m in range(1, 7):
                v2 = cf_vector(evaluate([a, b]), m)
                v3 = cf_vector(evaluate([a - 1, 1, b]), m)
                for i in range(m + 1):
                    two.record(v2[i] == r_two_digit(a, b, i, m), lambda: f"a={a}, b={b}, i={i}, m={m}")
                    three.record(v3[i] == r_three_digit(a, b, i, m), lambda: f"a={a}, b={b}, i={i}, m={m}")
    for c1 in range(1, 6):
        for a in range(1, 8):
            x = c1 + Fraction(1, a)
            for m in range(1, m_max + 1):
                v = cf_vector(x, m)
                for i in range(m + 1):
                    near.record(v[i] == r_near_integer(c1, a, i, m), lambda: f"c1={c1}, a={a}, i={i}, m={m}")
    for _ in range(samples):
        x = rng.rational(1, 20)
        t = Fraction(rng.below(1000), 1000)
        m = rng.between(1, m_max)
        N = math.ceil(x)
        F = genfun(x, m)(t)
        dom.record(0 < F <= 1 / (1 - t) ** N, lambda: f"x={x}, t={t}, m={m}")
    for _ in range(samples):
        x = _noninteger(rng, 1, 20)
        if x.denominator == 1:
            continue
        d = expand(x).digits
        c1, c2 = d[0], d[1]
        lo_pt, hi_pt = evaluate([c1, c2 + 1]), evaluate([c1, c2])
        m = rng.between(1, 8)
        vl, vx, vh = cf_vector(lo_pt, m), cf_vector(x, m), cf_vector(hi_pt, m)
        sandwich.record(
            all(vl[i] <= vx[i] <= vh[i] for i in range(m + 1)), lambda: f"x={x}, m={m}"
        )
    return [two, three, near, dom, sandwich]


_SUITE_FUNCS = {
    "monotonicity": suite_monotonicity,
    "bounds": suite_bounds,
    "identities": suite_identities,
    "lambda": suite_lambda,
    "genfun": suite_genfun,
}


def run_suite(name: str, samples: int = 200, seed: int = 0) -> Report:
    """Run one suite (or ``all``) deterministically for the given seed."""
    names: Iterable[str] = SUITES if name == "all" else (name,)
    if name != "all" and name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    report = Report(name, seed)
    for suite in names:
        # each suite gets its own stream so results don't depend on suite order
        rng = SplitMix64(seed ^ (hash_name(suite)))
        report.properties.extend(_SUITE_FUNCS[suite](samples, rng))
    return report.sorted()


def hash_name(name: str) -> int:
    """FNV-1a 64-bit, stable across processes unlike ``hash()``."""
    h = 0xCBF29CE484222325
    for byte in name.encode():
        h = ((h ^ byte) * 0x100000001B3) & MASK64
    return h
