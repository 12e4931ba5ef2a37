from collections import Counter
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from apostol_bernoulli.combinatorics import (
    bell_partial,
    bell_partitions,
    binomial,
    stirling2,
    stirling2_sum,
    stirling2_table,
)
from apostol_bernoulli.core import Series, exp_series, upoly

from conftest import rationals


def set_partitions(items):
    """All set partitions of a list, by brute force."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_bell(n, k, x):
    """B_{n,k}(x) as a sum over set partitions of {1..n} into k blocks."""
    total = Fraction(0)
    for p in set_partitions(list(range(n))):
        if len(p) != k:
            continue
        term = Fraction(1)
        for block in p:
            term *= x[len(block) - 1]
        total += term
    return total


# -- binomial ----------------------------------------------------------------

def test_binomial_conventions():
    assert binomial(0, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(4, 2) == 6
    assert binomial(4, -1) == 0


def test_binomial_rejects_negative_top():
    with pytest.raises(ValueError):
        binomial(-1, 0)


# -- Stirling ----------------------------------------------------------------

def test_stirling_examples():
    assert stirling2_sum(1, 1) == 1
    assert stirling2_sum(3, 2) == 3
    assert stirling2_sum(4, 2) == 7
    assert stirling2_sum(2, 0) == 0
    assert stirling2_sum(0, 0) == 1
    assert stirling2_sum(2, 5) == 0


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling_counts_set_partitions(n):
    counts = Counter(len(p) for p in set_partitions(list(range(n))))
    for k in range(n + 1):
        assert stirling2_sum(n, k) == counts.get(k, 0)


def test_table_rows():
    t = stirling2_table(5)
    assert t.row(0) == (1,)
    assert t.row(3) == (0, 1, 3, 1)
    assert t(5, 5) == 1
    assert t(3, 7) == 0
    with pytest.raises(IndexError):
        t(6, 1)


def test_table_recurrence_and_boundaries():
    t = stirling2_table(20)
    for n in range(1, 21):
        assert t(n, 0) == 0
        assert t(n, n) == 1
        for k in range(1, n):
            assert t(n, k) == k * t(n - 1, k) + t(n - 1, k - 1)


def test_sum_equals_table_to_30():
    t = stirling2_table(30)
    for n in range(31):
        for k in range(n + 1):
            assert stirling2_sum(n, k) == t(n, k) == stirling2(n, k)


def test_column_generating_function():
    order = 12
    e = exp_series(Fraction(1), order)
    em1 = e - Series([Fraction(1)] + [Fraction(0)] * order)
    for k in range(6):
        col = (em1 ** k).scale(Fraction(1, factorial(k)))
        for n in range(order + 1):
            assert col[n] == Fraction(stirling2_sum(n, k), factorial(n))


# -- Bell --------------------------------------------------------------------

def test_bell_examples():
    assert bell_partial(0, 0, [Fraction(9)]) == 1
    assert bell_partial(4, 2, [1, 1, 1]) == 7
    x1, x2 = Fraction(5), Fraction(-3, 7)
    assert bell_partial(3, 2, [x1, x2]) == 3 * x1 * x2
    for n in range(6):
        assert bell_partial(n, n, [x1]) == x1 ** n


def test_bell_zero_column():
    for n in range(1, 6):
        assert bell_partial(n, 0, [Fraction(1)] * (n + 1)) == 0


def test_bell_symbolic():
    u = upoly(0, 1)
    # B_{3,2}(u, u^2) = 3 u^3
    assert bell_partial(3, 2, [u, u * u]) == upoly(0, 0, 0, 3)


def test_bell_argument_length():
    with pytest.raises(ValueError):
        bell_partial(4, 2, [1, 1])
    with pytest.raises(ValueError):
        bell_partial(2, 3, [1])


def test_partition_order_is_lexicographic():
    parts = list(bell_partitions(6, 3))
    assert parts == sorted(parts)
    assert parts == [(0, 3, 0, 0), (1, 1, 1, 0), (2, 0, 0, 1)]


@pytest.mark.parametrize("n", range(0, 7))
def test_bell_against_set_partitions(n):
    x = [Fraction(i * i - 3, i + 1) for i in range(1, n + 2)]
    for k in range(n + 1):
        assert bell_partial(n, k, x[:n - k + 1]) == brute_bell(n, k, x)


def addition_rhs(n, k, x, y):
    total = Fraction(0)
    for r in range(k + 1):
        for l in range(n + 1):
            s, m = k - r, n - l
            if r <= l and s <= m:
                total += (binomial(n, l) * bell_partial(l, r, x[:l - r + 1])
                          * bell_partial(m, s, y[:m - s + 1]))
    return total


@st.composite
def bell_case(draw, n_max=10):
    n = draw(st.integers(0, n_max))
    k = draw(st.integers(0, n))
    return n, k


@settings(max_examples=200, deadline=None)
@given(bell_case(), st.lists(rationals, min_size=11, max_size=11),
       st.lists(rationals, min_size=11, max_size=11))
def test_bell_addition(nk, x, y):
    n, k = nk
    w = n - k + 1
    lhs = bell_partial(n, k, [a + b for a, b in zip(x[:w], y[:w])])
    assert lhs == addition_rhs(n, k, x, y)


@settings(max_examples=200, deadline=None)
@given(bell_case(), rationals, rationals, st.lists(rationals, min_size=11, max_size=11))
def test_bell_scaling(nk, a, b, x):
    n, k = nk
    x = x[:n - k + 1]
    scaled = [a * b ** i * xi for i, xi in enumerate(x, start=1)]
    assert bell_partial(n, k, scaled) == a ** k * b ** n * bell_partial(n, k, x)


@settings(max_examples=200, deadline=None)
@given(bell_case(n_max=12))
def test_bell_all_ones(nk):
    n, k = nk
    assert bell_partial(n, k, [1] * (n - k + 1)) == stirling2_sum(n, k)
