"""Independent oracles shared by the tests.

Nothing here imports the package's matrix or CF code; these are the
slow, obvious versions the fast paths are checked against.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest


def naive_binomial(n, k):
    if k < 0:
        return 0
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(n - i, i + 1)
    assert value.denominator == 1
    return int(value)


def count_subsets(n, k):
    return sum(1 for _ in combinations(range(n), k))


def count_multisets(n, k):
    return sum(1 for _ in combinations_with_replacement(range(n), k))


def naive_lambda(m, a):
    return [[naive_binomial(a + (m + 2 - i - j) - 1, m + 2 - i - j) for j in range(1, m + 2)] for i in range(1, m + 2)]


def naive_matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def naive_cf(x):
    x = Fraction(x)
    digits = []
    while True:
        a = x.numerator // x.denominator
        digits.append(a)
        if x == a:
            return digits
        x = 1 / (x - a)


def naive_product(digits, m):
    M = naive_lambda(m, digits[0])
    for c in digits[1:]:
        M = naive_matmul(M, naive_lambda(m, c))
    return M


def naive_vector(x, m):
    """r_{0..m,m}(x) ascending, straight from the full matrix product."""
    M = naive_product(naive_cf(x), m)
    col = [row[0] for row in M]
    return [Fraction(c, col[-1]) for c in reversed(col)]


@pytest.fixture
def oracle():
    import types

    return types.SimpleNamespace(
        binomial=naive_binomial,
        lam=naive_lambda,
        product=naive_product,
        vector=naive_vector,
        cf=naive_cf,
        subsets=count_subsets,
        multisets=count_multisets,
    )


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
