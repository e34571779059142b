"""Integer Lambda-matrices, the R/L/W generators and ratio reversal.

Matrices are tuples of row tuples of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cf import CFExpansion, canonicalize
from .exact import PreconditionError, multichoose

Matrix = tuple[tuple[int, ...], ...]


def _check_m(m: int) -> None:
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matpow(a: Matrix, e: int) -> Matrix:
    """Non-negative power by repeated squaring."""
    if e < 0:
        raise PreconditionError("negative exponent; invert first")
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    rows = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for s in range(k + 1, n):
                if rows[s][k] != 0:
                    rows[k], rows[s] = rows[s], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


@lru_cache(maxsize=4096)
def lambda_matrix(m: int, a: int) -> Matrix:
    """``Lambda_m(a)``: entry ``(i, j)`` (1-based) is ``multichoose(a, m+2-i-j)``.

    Built straight from the generalized multichoose, so negative ``a`` needs
    no special casing.
    """
    _check_m(m)
    n = m + 1
    return tuple(
        tuple(multichoose(a, m + 2 - (i + 1) - (j + 1)) for j in range(n)) for i in range(n)
    )


@dataclass(frozen=True)
class GeneratorTriple:
    R: Matrix
    L: Matrix
    W: Matrix


def generators(m: int) -> GeneratorTriple:
    _check_m(m)
    n = m + 1
    R = tuple(tuple(int(j >= i) for j in range(n)) for i in range(n))
    L = tuple(tuple(int(j <= i) for j in range(n)) for i in range(n))
    W = tuple(tuple(int(i + j == n - 1) for j in range(n)) for i in range(n))
    return GeneratorTriple(R, L, W)


def r_inverse(m: int) -> Matrix:
    """Inverse of ``R_m``: ones on the diagonal, -1 just above it."""
    _check_m(m)
    n = m + 1
    return tuple(tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n)) for i in range(n))


def cf_product(cf: CFExpansion | Sequence[int], m: int, canonical: bool = True) -> Matrix:
    """``Lambda_m(c1) Lambda_m(c2) ... Lambda_m(cn)``, accumulated left to right."""
    _check_m(m)
    if canonical:
        cf = canonicalize(cf)
    digits = cf.digits if isinstance(cf, CFExpansion) else tuple(cf)
    M = lambda_matrix(m, digits[0])
    for c in digits[1:]:
        M = matmul(M, lambda_matrix(m, c))
    return M


def first_column(cf: CFExpansion | Sequence[int], m: int) -> tuple[int, ...]:
    """First column of :func:`cf_product` by right-to-left matrix-vector products."""
    _check_m(m)
    digits = cf.digits if isinstance(cf, CFExpansion) else tuple(cf)
    v: tuple[int, ...] = (1,) + (0,) * m
    for c in reversed(digits):
        v = matvec(lambda_matrix(m, c), v)
    return v


# --- ratio reversal -------------------------------------------------------------


@dataclass(frozen=True)
class ReversalReport:
    holds: bool
    strict_expected: bool
    strict_holds: bool
    violations: tuple[int, ...]  # 1-based indices i where the reversed order fails
    images: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]


def _ratios_dominate(x: Sequence[Fraction], y: Sequence[Fraction]) -> list[bool]:
    """``x_i/x_{i+1} >= y_i/y_{i+1}`` per index, by cross-multiplication."""
    return [x[i] * y[i + 1] >= y[i] * x[i + 1] for i in range(len(x) - 1)]


def check_ratio_reversal(X: Sequence, Y: Sequence, a: int, m: int | None = None) -> ReversalReport:
    """Check that ``Lambda_m(a)`` reverses the consecutive-ratio order of X over Y.

    The precondition ``x_i/x_{i+1} >= y_i/y_{i+1} > 0`` is validated and a
    violation raises :class:`PreconditionError`; property failures are
    returned in the report.
    """
    X = tuple(Fraction(v) for v in X)
    Y = tuple(Fraction(v) for v in Y)
    if len(X) != len(Y) or len(X) < 2:
        raise PreconditionError("X and Y must have the same length >= 2")
    if m is None:
        m = len(X) - 1
    if len(X) != m + 1:
        raise PreconditionError(f"vectors must have length m+1 = {m + 1}")
    if a < 1:
        raise PreconditionError("a must be a positive integer")
    if any(v <= 0 for v in X + Y):
        raise PreconditionError("entries must be positive")
    if not all(_ratios_dominate(X, Y)):
        raise PreconditionError("x_i/x_{i+1} >= y_i/y_{i+1} fails for some i")
    lam = lambda_matrix(m, a)
    Xp, Yp = matvec(lam, X), matvec(lam, Y)
    ok = _ratios_dominate(Yp, Xp)
    violations = tuple(i + 1 for i, good in enumerate(ok) if not good)
    strict_expected = X[0] * Y[1] > Y[0] * X[1]
    strict_holds = all(Yp[i] * Xp[i + 1] > Xp[i] * Yp[i + 1] for i in range(m))
    return ReversalReport(not violations, strict_expected, strict_holds, violations, (Xp, Yp))


def lemma_inequality(a: int, m: int, i: int, j: int, k: int) -> tuple[int, int]:
    """Both sides of the multichoose cross-product inequality behind ratio reversal.

    Returns ``(lhs, rhs)`` with ``lhs >= rhs`` expected for ``j < k``; strict
    when ``a > 1`` and ``j, k <= m + 2 - i``.
    """
    lhs = multichoose(a, m + 2 - (i + k)) * multichoose(a, m + 1 - (i + j))
    rhs = multichoose(a, m + 2 - (i + j)) * multichoose(a, m + 1 - (i + k))
    return lhs, rhs
