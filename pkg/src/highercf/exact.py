"""Exact integer/rational helpers and generalized binomial coefficients.

Python ints are already arbitrary precision, and :class:`fractions.Fraction`
keeps every rational reduced with a positive denominator, so both are used
directly as the number types of the package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

BigRational = Fraction
RationalLike = Union[int, Fraction, str]


class HCFError(ValueError):
    """Base class for every error raised by this package."""


class PreconditionError(HCFError):
    pass


class DegenerateInputError(HCFError):
    pass


@lru_cache(maxsize=65536)
def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient, defined for every integer ``n``.

    Returns 0 for ``k < 0`` and ``prod_{i<k} (n - i) / k!`` otherwise, which
    agrees with the usual coefficient when ``0 <= k <= n``.
    """
    if k < 0:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return num // den


def multichoose(n: int, k: int) -> int:
    """``n`` multichoose ``k``, i.e. ``binomial(n + k - 1, k)``."""
    return binomial(n + k - 1, k)


_RATIONAL_RE = re.compile(
    r"""
    \s*[+-]?(
        \d+(/\d+)?                      # integer or p/q
      | (\d+\.\d*|\.\d+)([eE][+-]?\d+)? # terminating decimal
      | \d+[eE][+-]?\d+                 # scientific integer
    )\s*$
    """,
    re.VERBOSE,
)


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``p/q``, an integer, or a terminating decimal into an exact rational.

    Decimals denote the exact rational they spell (``1.75`` is ``7/4``).
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not _RATIONAL_RE.match(text):
        raise HCFError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise HCFError(f"zero denominator in {text!r}") from None


def format_rational(x: Fraction) -> str:
    """Render as ``p/q`` (always with an explicit denominator)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def to_decimal(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering rounded half-to-even at ``digits`` fractional places.

    Presentation only; nothing in the package reads these strings back.
    """
    if digits < 0:
        raise HCFError("digits must be non-negative")
    scaled = round(Fraction(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + body
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def divide(p: RationalLike, q: RationalLike) -> Fraction:
    """Exact division that raises :class:`HCFError` instead of ZeroDivisionError."""
    q = parse_rational(q)
    if q == 0:
        raise HCFError("division by zero")
    return parse_rational(p) / q
