"""The higher continued fraction maps ``r_{i,m}`` and their enclosures."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cf import Finite, RealInput, digit_stream, expand, is_irrational
from .exact import DegenerateInputError, HCFError, PreconditionError, binomial, multichoose
from .lambdas import first_column, lambda_matrix, matmul

DEFAULT_MAX_DEPTH = 10_000


@dataclass(frozen=True)
class HCFVector:
    """``CF_m(x)`` stored in ascending index order: ``values[i] == r_{i,m}(x)``."""

    m: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.m + 1:
            raise HCFError("HCFVector needs m+1 values")
        if self.values[0] != 1:
            raise HCFError("r_0 must be 1")

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def column(self) -> tuple[Fraction, ...]:
        """Top-to-bottom order ``(r_m, ..., r_1, 1)`` as printed for CF_m."""
        return tuple(reversed(self.values))


def _normalize(column, m: int) -> HCFVector:
    bottom = column[-1]
    if bottom == 0:
        raise DegenerateInputError("bottom entry of the first column is zero")
    return HCFVector(m, tuple(Fraction(c, bottom) for c in reversed(column)))


def _check(i: int, m: int) -> None:
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    if not 0 <= i <= m:
        raise PreconditionError(f"index i={i} outside [0, {m}]")


def cf_vector(x, m: int) -> HCFVector:
    """Normalized first column of the Lambda-product along the canonical CF of x."""
    _check(0, m)
    return _normalize(first_column(expand(x), m), m)


def r(x, i: int, m: int) -> Fraction:
    _check(i, m)
    return cf_vector(x, m)[i]


def shift_up(v: HCFVector) -> HCFVector:
    """``CF_m(x) -> CF_m(x+1)``: ``r_i(x+1) = sum_{k<=i} r_k(x)``."""
    return HCFVector(v.m, tuple(itertools.accumulate(v.values)))


def shift_down(v: HCFVector) -> HCFVector:
    """``CF_m(x) -> CF_m(x-1)``: ``r_i(x-1) = r_i(x) - r_{i-1}(x)`` for i > 0."""
    vals = v.values
    return HCFVector(v.m, (vals[0],) + tuple(vals[i] - vals[i - 1] for i in range(1, v.m + 1)))


def r_via_shift(x, i: int, m: int) -> Fraction:
    """``r_{i,m}(x)`` computed from ``x + n >= 1`` and repeated downward shifts.

    Independent of :func:`r` for ``x < 1`` since no non-positive digit
    ever enters a matrix product.
    """
    _check(i, m)
    x = Fraction(x)
    n = max(0, math.ceil(1 - x))
    v = cf_vector(x + n, m)
    for _ in range(n):
        v = shift_down(v)
    return v[i]


def reciprocal_vector(v: HCFVector) -> HCFVector:
    """``CF_m(1/x)`` from ``CF_m(x)``: ``r_i(1/x) = r_{m-i}(x) / r_m(x)``."""
    top = v[v.m]
    if top == 0:
        raise DegenerateInputError("r_{m,m}(x) is zero; reciprocal undefined")
    return HCFVector(v.m, tuple(v[v.m - i] / top for i in range(v.m + 1)))


# --- enclosures ------------------------------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction
    witness_depth: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi


def max_depth_from_env(default: int = DEFAULT_MAX_DEPTH) -> int:
    raw = os.environ.get("HCF_MAX_DEPTH")
    if raw is None:
        return default
    try:
        depth = int(raw)
    except ValueError:
        raise HCFError(f"HCF_MAX_DEPTH must be an integer, got {raw!r}") from None
    if depth < 2:
        raise HCFError("HCF_MAX_DEPTH must be >= 2")
    return depth


def convergent_vectors(digits: Iterator[int], m: int) -> Iterator[HCFVector]:
    """``CF_m`` at each convergent, reusing the running left-to-right product."""
    M = None
    for c in digits:
        lam = lambda_matrix(m, c)
        M = lam if M is None else matmul(M, lam)
        yield _normalize([row[0] for row in M], m)


def bracket_sequence(x: RealInput, m: int, max_depth: int = DEFAULT_MAX_DEPTH) -> Iterator[tuple[int, HCFVector, HCFVector]]:
    """Yield ``(depth, CF_m(z_{2k-1}), CF_m(z_{2k}))`` for k = 1, 2, ...

    Odd convergents lie below a positive irrational and even ones above it,
    so on (0, inf), where every ``r_{i,m}`` is increasing, each pair brackets
    the true vector componentwise.
    """
    vectors = convergent_vectors(digit_stream(x), m)
    depth = 0
    for odd, even in zip(vectors, vectors):
        depth += 2
        yield depth, odd, even
        if depth + 2 > max_depth:
            return


def _enclose_components(x: RealInput, top: int, m: int, budgets: list[Fraction], max_depth: int):
    """Enclose ``r_{0..top,m}(x)`` for irrational ``x > 0`` until each width fits its budget."""
    last = None
    for depth, odd, even in bracket_sequence(x, m, max_depth):
        boxes = [
            Enclosure(min(odd[k], even[k]), max(odd[k], even[k]), depth) for k in range(top + 1)
        ]
        last = boxes
        if all(b.width <= budgets[k] for k, b in enumerate(boxes)):
            return boxes
    raise HCFError(
        f"enclosure did not reach the requested width within {max_depth} digits"
        + (f" (last width {float(last[top].width):.3e})" if last else "")
    )


def _shifted(x: RealInput, n: int) -> RealInput:
    from .cf import EventuallyPeriodic

    if isinstance(x, EventuallyPeriodic):
        if x.preperiod:
            return EventuallyPeriodic((x.preperiod[0] + n,) + x.preperiod[1:], x.period)
        return EventuallyPeriodic((x.period[0] + n,) + x.period[1:], x.period)
    raise PreconditionError("only eventually periodic inputs can be negative")


def _first_digit(x: RealInput) -> int:
    return next(digit_stream(x))


def enclose(x: RealInput, i: int, m: int, eps, max_depth: int | None = None) -> Enclosure:
    """Exact rational interval of width ``<= eps`` containing ``r_{i,m}(x)``.

    For ``x > 0`` the endpoints are the values at consecutive odd/even
    convergents. For ``x < 0`` every component is enclosed at ``x + n >= 1``
    and the exact downward shift is applied with interval arithmetic.
    """
    _check(i, m)
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    if isinstance(x, Finite) or not is_irrational(x):
        raise PreconditionError("input is rational; evaluate it exactly with r()")
    if max_depth is None:
        max_depth = max_depth_from_env()

    c1 = _first_digit(x)
    if c1 >= 0:
        return _enclose_components(x, i, m, [eps] * (i + 1), max_depth)[i]

    # floor(x) = c1 < 0, so x + n >= 1 with n = 1 - c1
    n = 1 - c1
    budget = eps / 2 ** (n + 1)
    boxes = _enclose_components(_shifted(x, n), i, m, [budget] * (i + 1), max_depth)
    # n downward shifts compose to r_i(x) = sum_k (-1)^(i-k) C(n, i-k) r_k(x+n)
    lo = hi = Fraction(0)
    for k, box in enumerate(boxes):
        coef = (-1) ** (i - k) * binomial(n, i - k)
        if coef >= 0:
            lo += coef * box.lo
            hi += coef * box.hi
        else:
            lo += coef * box.hi
            hi += coef * box.lo
    return Enclosure(lo, hi, boxes[i].witness_depth)


# --- inequality checks ---------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    failures: tuple[str, ...] = ()


def check_ratio_bounds(x, m: int) -> CheckReport:
    """Consecutive ratios ``r_i/r_{i-1}`` against ``(n-1+i)/i`` and ``(n+i)/i``, n = floor(x)."""
    x = Fraction(x)
    if x < 1:
        raise PreconditionError("ratio bounds need x >= 1")
    v = cf_vector(x, m)
    n = math.floor(x)
    failures = []
    for i in range(1, m + 1):
        ratio = v[i] / v[i - 1]
        low, high = Fraction(n - 1 + i, i), Fraction(n + i, i)
        if x.denominator == 1:
            good = ratio == low
        else:
            good = low < ratio < high
        if not good:
            failures.append(f"i={i}: ratio {ratio} vs ({low}, {high})")
    return CheckReport(not failures, tuple(failures))


def check_value_bounds(x, m: int) -> CheckReport:
    """``mc(a,k)/mc(a,j) <= r_k/r_j < mc(a+1,k)/mc(a+1,j)`` for ``0 <= j < k <= m``, a = floor(x).

    The left side is an equality exactly when x is an integer.
    """
    x = Fraction(x)
    if x < 1:
        raise PreconditionError("value bounds need x >= 1")
    v = cf_vector(x, m)
    a = math.floor(x)
    integer = x.denominator == 1
    failures = []
    for k in range(1, m + 1):
        for j in range(k):
            ratio = v[k] / v[j]
            low = Fraction(multichoose(a, k), multichoose(a, j))
            high = Fraction(multichoose(a + 1, k), multichoose(a + 1, j))
            good = (ratio == low) if integer else (low < ratio < high)
            if not good:
                failures.append(f"j={j}, k={k}: {ratio} vs [{low}, {high})")
    return CheckReport(not failures, tuple(failures))
