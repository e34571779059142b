"""Bisection inverse of ``r_{i,m}`` on [0, inf)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import HCFError, PreconditionError, multichoose
from .maps import cf_vector


@dataclass(frozen=True)
class InverseResult:
    x_hat: Fraction
    residual: Fraction  # r(x_hat) - y
    iterations: int
    exact: bool = False


class IterationCapExceeded(HCFError):
    def __init__(self, lo: Fraction, hi: Fraction, iterations: int):
        super().__init__(f"no probe within tolerance after {iterations} iterations; bracket [{lo}, {hi}]")
        self.lo, self.hi, self.iterations = lo, hi, iterations


def default_cap(eps: Fraction) -> int:
    bits = max(1, math.ceil(math.log2(1 / eps))) if eps < 1 else 1
    return 10 * bits + 64


def _upper_integer(y: Fraction, i: int) -> int:
    """Least integer n >= 0 with ``multichoose(n, i) >= y``."""
    n = 0
    while multichoose(n, i) < y:
        n = max(1, 2 * n)
    lo = n // 2
    while lo < n:
        mid = (lo + n) // 2
        if multichoose(mid, i) >= y:
            n = mid
        else:
            lo = mid + 1
    return n


def invert(y, i: int, m: int, eps, max_iter: int | None = None) -> InverseResult:
    """Find ``x_hat >= 0`` with ``|r_{i,m}(x_hat) - y| <= eps``.

    The bracket starts at ``[0, n*]`` where ``r_{i,m}(n*) = multichoose(n*, i) >= y``.
    The first interior probe interpolates linearly between the bracket
    values; all later probes are exact midpoints.
    """
    y, eps = Fraction(y), Fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    if y < 0:
        raise PreconditionError("y must be non-negative")
    if not 1 <= i <= m:
        raise PreconditionError("need 1 <= i <= m")
    if max_iter is None:
        max_iter = default_cap(eps)

    cache: dict[Fraction, Fraction] = {}

    def value(x: Fraction) -> Fraction:
        if x not in cache:
            cache[x] = cf_vector(x, m)[i]
        return cache[x]

    lo, hi = Fraction(0), Fraction(_upper_integer(y, i))
    f_lo, f_hi = value(lo), value(hi)
    for x, fx in ((lo, f_lo), (hi, f_hi)):
        if fx == y:
            return InverseResult(x, Fraction(0), 0, exact=True)
    for x, fx in ((lo, f_lo), (hi, f_hi)):
        if abs(fx - y) <= eps:
            return InverseResult(x, fx - y, 0)

    for it in range(1, max_iter + 1):
        if not f_lo <= y <= f_hi:
            raise HCFError(f"bracket invariant broken at iteration {it}: [{lo}, {hi}]")
        if it == 1:
            mid = lo + (hi - lo) * (y - f_lo) / (f_hi - f_lo)
        else:
            mid = (lo + hi) / 2
        f_mid = value(mid)
        if f_mid == y:
            return InverseResult(mid, Fraction(0), it, exact=True)
        if abs(f_mid - y) <= eps:
            return InverseResult(mid, f_mid - y, it)
        if f_mid < y:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    raise IterationCapExceeded(lo, hi, max_iter)
