"""Generating polynomial ``F_m(x, t) = sum_i r_{i,m}(x) t^i`` and m -> inf diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import PreconditionError, multichoose
from .maps import cf_vector


@dataclass(frozen=True)
class GenPoly:
    x: Fraction
    m: int
    coefficients: tuple[Fraction, ...]  # ascending degree

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(f"({c})*t" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms)


def genfun(x, m: int) -> GenPoly:
    x = Fraction(x)
    return GenPoly(x, m, cf_vector(x, m).values)


def binomial_series(t, N: int) -> Fraction:
    """``(1 - t)^(-N)`` exactly, for rational ``|t| < 1``."""
    t = Fraction(t)
    if not -1 < t < 1:
        raise PreconditionError("need |t| < 1")
    return 1 / (1 - t) ** N


def genfun_gap(x, t, m: int) -> Fraction:
    """``(1 - t)^(-ceil(x)) - F_m(x, t)`` exactly."""
    x, t = Fraction(x), Fraction(t)
    if x < 1:
        raise PreconditionError("need x >= 1")
    return binomial_series(t, math.ceil(x)) - genfun(x, m)(t)


@dataclass(frozen=True)
class ProfileRow:
    m: int
    value: Fraction
    target: int


def limit_profile(x, i: int, m_max: int) -> list[ProfileRow]:
    """``r_{i,m}(x)`` for ``m = max(i,1) .. m_max`` next to the limit ``multichoose(ceil(x), i)``."""
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError("need x > 0")
    if i < 0:
        raise PreconditionError("need i >= 0")
    start = max(i, 1)
    if m_max < start:
        raise PreconditionError(f"m_max must be >= {start}")
    target = multichoose(math.ceil(x), i)
    return [ProfileRow(m, cf_vector(x, m)[i], target) for m in range(start, m_max + 1)]


# closed forms at short expansions, used as oracles against cf_vector


def r_two_digit(a: int, b: int, i: int, m: int) -> Fraction:
    """``r_{i,m}([a, b]) = sum_j mc(a, i-j) mc(b, m-j) / mc(b, m)``."""
    return sum(
        (Fraction(multichoose(a, i - j) * multichoose(b, m - j), multichoose(b, m)) for j in range(i + 1)),
        Fraction(0),
    )


def r_three_digit(a: int, b: int, i: int, m: int) -> Fraction:
    """``r_{i,m}([a-1, 1, b])`` via partial sums of ``mc(b, k)``."""
    total = sum(multichoose(b, k) for k in range(m + 1))
    return sum(
        (
            Fraction(multichoose(a - 1, i - j) * sum(multichoose(b, k) for k in range(j, m + 1)), total)
            for j in range(i + 1)
        ),
        Fraction(0),
    )


def r_near_integer(c1: int, a: int, i: int, m: int) -> Fraction:
    """``r_{i,m}(c1 + 1/a) = sum_{j=1}^{i+1} mc(c1, i+1-j) mc(a, m+1-j) / mc(a, m)``."""
    return sum(
        (
            Fraction(multichoose(c1, i + 1 - j) * multichoose(a, m + 1 - j), multichoose(a, m))
            for j in range(1, i + 2)
        ),
        Fraction(0),
    )
