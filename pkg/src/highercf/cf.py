"""Simple continued fractions: expansion, evaluation, convergents, digit sources."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .exact import HCFError, PreconditionError, parse_rational


@dataclass(frozen=True)
class CFExpansion:
    """Finite continued fraction ``[c1, ..., cn]``.

    ``c1`` may be any integer; later digits must be positive. Canonical form
    additionally ends in a digit >= 2 whenever ``n >= 2``.
    """

    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise HCFError("continued fraction needs at least one digit")
        if any(d < 1 for d in digits[1:]):
            raise HCFError(f"digits after the first must be >= 1: {list(digits)}")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def is_canonical(self) -> bool:
        return len(self.digits) == 1 or self.digits[-1] >= 2

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.digits)) + "]"


def canonicalize(cf: CFExpansion | Sequence[int]) -> CFExpansion:
    digits = list(cf.digits if isinstance(cf, CFExpansion) else cf)
    CFExpansion(tuple(digits))  # validate
    while len(digits) >= 2 and digits[-1] == 1:
        digits.pop()
        digits[-1] += 1
    return CFExpansion(tuple(digits))


def expand(x) -> CFExpansion:
    """Canonical continued fraction of a rational (floor, then reciprocal)."""
    x = parse_rational(x)
    p, q = x.numerator, x.denominator
    digits = []
    while True:
        a, r = divmod(p, q)
        digits.append(a)
        if r == 0:
            break
        p, q = q, r
    return CFExpansion(tuple(digits))


def evaluate(cf: CFExpansion | Sequence[int]) -> Fraction:
    digits = cf.digits if isinstance(cf, CFExpansion) else tuple(cf)
    if not digits:
        raise HCFError("empty continued fraction")
    value = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        if value == 0:
            raise HCFError("continued fraction tail evaluates to zero")
        value = d + 1 / value
    return value


# --- real inputs -------------------------------------------------------------


@dataclass(frozen=True)
class Finite:
    cf: CFExpansion

    @property
    def value(self) -> Fraction:
        return evaluate(self.cf)


@dataclass(frozen=True)
class EventuallyPeriodic:
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(d) for d in self.preperiod))
        object.__setattr__(self, "period", tuple(int(d) for d in self.period))
        if not self.period:
            raise HCFError("period must be non-empty")
        if any(d < 1 for d in self.period):
            raise HCFError("period digits must be >= 1")
        if any(d < 1 for d in self.preperiod[1:]):
            raise HCFError("digits after the first must be >= 1")


@dataclass(frozen=True)
class Named:
    tag: str

    def __post_init__(self):
        if self.tag in ("phi", "e"):
            return
        m = re.fullmatch(r"sqrt:(\d+)", self.tag)
        if not m:
            raise HCFError(f"unknown named constant {self.tag!r}")
        d = int(m.group(1))
        if d < 2 or math.isqrt(d) ** 2 == d:
            raise HCFError(
                f"sqrt:{d} is rational or out of range; pass it as a finite value"
            )


RealInput = Union[Finite, EventuallyPeriodic, Named]


def is_irrational(x: RealInput) -> bool:
    return not isinstance(x, Finite)


def _sqrt_digits(d: int) -> Iterator[int]:
    a0 = math.isqrt(d)
    yield a0
    m, den, a = 0, 1, a0
    while True:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        yield a


def _e_digits() -> Iterator[int]:
    yield 2
    for k in itertools.count(1):
        yield 1
        yield 2 * k
        yield 1


def digit_stream(x: RealInput) -> Iterator[int]:
    """Fresh iterator over the digits of ``x``; every call restarts."""
    if isinstance(x, Finite):
        return iter(x.cf.digits)
    if isinstance(x, EventuallyPeriodic):
        return itertools.chain(x.preperiod, itertools.cycle(x.period))
    if x.tag == "phi":
        return itertools.repeat(1)
    if x.tag == "e":
        return _e_digits()
    return _sqrt_digits(int(x.tag.split(":")[1]))


@dataclass(frozen=True)
class ConvergentPair:
    index: int
    value: Fraction


def iter_convergents(x: RealInput) -> Iterator[ConvergentPair]:
    """Prefix values via the usual p/q recurrence."""
    p_prev, q_prev, p, q = 1, 0, None, None
    for n, c in enumerate(digit_stream(x), start=1):
        if p is None:
            p, q = c, 1
        else:
            p, p_prev = c * p + p_prev, p
            q, q_prev = c * q + q_prev, q
        yield ConvergentPair(n, Fraction(p, q))


def convergents(x: RealInput, count: int) -> list[ConvergentPair]:
    if count < 1:
        raise PreconditionError("count must be >= 1")
    out = list(itertools.islice(iter_convergents(x), count))
    if len(out) < count:
        raise PreconditionError(
            f"input has only {len(out)} digits, {count} convergents requested"
        )
    return out


# --- input grammar -------------------------------------------------------------

_INT_LIST = r"\s*-?\d+(\s*,\s*\d+)*\s*"


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(t) for t in text.split(",")) if text else ()


def parse_real(text: str) -> RealInput:
    """Parse a value in the CLI input grammar.

    Accepted: ``p/q``, integers, decimals, ``[c1,c2,...]``,
    ``[c1,...;(p1,...,pk)]``, ``phi``, ``sqrt:D`` and ``e``.
    """
    s = text.strip()
    if s in ("phi", "e") or s.startswith("sqrt:"):
        return Named(s)
    if s.startswith("["):
        m = re.fullmatch(r"\[(.*?)(?:;\s*\((.*)\)\s*)?\]", s)
        if not m:
            raise HCFError(f"malformed continued fraction literal {text!r}")
        head, period = m.group(1), m.group(2)
        if head.strip() and not re.fullmatch(_INT_LIST, head):
            raise HCFError(f"malformed digit list {head!r}")
        if period is not None:
            if not re.fullmatch(_INT_LIST.replace("-?", ""), period):
                raise HCFError(f"malformed period {period!r}")
            return EventuallyPeriodic(_ints(head), _ints(period))
        digits = _ints(head)
        return Finite(canonicalize(digits))
    return Finite(expand(parse_rational(s)))


def as_rational(x: RealInput) -> Fraction:
    if not isinstance(x, Finite):
        raise PreconditionError(
            "input is irrational; use an enclosure instead of exact evaluation"
        )
    return x.value
