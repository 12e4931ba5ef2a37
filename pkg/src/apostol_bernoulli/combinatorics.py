"""Binomials, Stirling numbers of the second kind, partial Bell polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Sequence


def binomial(p: int, q: int) -> int:
    """``C(p, q)`` with ``C(0, 0) = 1`` and ``C(p, q) = 0`` for ``q < 0`` or ``q > p``."""
    if p < 0:
        raise ValueError(f"binomial top index must be nonnegative, got {p}")
    if q < 0 or q > p:
        return 0
    return comb(p, q)


def stirling2_sum(n: int, k: int) -> int:
    """S(n, k) from the alternating sum ``(1/k!) sum_l (-1)^(k-l) C(k,l) l^n``.

    Outside ``n >= k >= 1``: S(0, 0) = 1, S(n, 0) = 0 for n >= 1, S(n, k) = 0
    for k > n.
    """
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    total = sum((-1) ** (k - l) * comb(k, l) * l ** n for l in range(1, k + 1))
    q, r = divmod(total, factorial(k))
    assert r == 0
    return q


@dataclass(frozen=True)
class StirlingTable:
    max_n: int
    values: tuple  # values[n][k] for 0 <= k <= n

    def __call__(self, n: int, k: int) -> int:
        if n > self.max_n:
            raise IndexError(f"table only reaches n = {self.max_n}")
        if k < 0 or k > n:
            return 0
        return self.values[n][k]

    def row(self, n: int) -> tuple:
        return self.values[n]


@lru_cache(maxsize=None)
def stirling2_table(max_n: int) -> StirlingTable:
    """Triangle S(n, k), 0 <= k <= n <= max_n, from S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
        rows.append(tuple(row))
    return StirlingTable(max_n, tuple(rows))


_TABLE_CHUNK = 64


def stirling2(n: int, k: int) -> int:
    """Cached lookup of S(n, k) with the boundary conventions of ``stirling2_sum``."""
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be nonnegative")
    size = (n // _TABLE_CHUNK + 1) * _TABLE_CHUNK
    return stirling2_table(size)(n, k)


def bell_partitions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ``(l_1, ..., l_{n-k+1})`` with sum l_i = k and sum i*l_i = n.

    Lexicographic order in ``l_1, l_2, ...``.
    """
    width = n - k + 1
    if width < 1:
        return
    counts = [0] * width

    def rec(i: int, parts_left: int, weight_left: int):
        # i is a 0-based slot for block size i + 1
        if i == width - 1:
            size = i + 1
            if parts_left * size == weight_left:
                counts[i] = parts_left
                yield tuple(counts)
                counts[i] = 0
            return
        size = i + 1
        for c in range(0, min(parts_left, weight_left // size) + 1):
            p, w = parts_left - c, weight_left - c * size
            # remaining parts have sizes in [size + 1, width]
            if p * (size + 1) > w or p * width < w:
                continue
            counts[i] = c
            yield from rec(i + 1, p, w)
        counts[i] = 0

    yield from rec(0, k, n)


def bell_coefficient(n: int, ells: Sequence[int]) -> int:
    """``n! / prod(l_i! * i!^l_i)``: number of set partitions with block-size profile ``ells``."""
    den = 1
    for i, l in enumerate(ells, start=1):
        den *= factorial(l) * factorial(i) ** l
    q, r = divmod(factorial(n), den)
    assert r == 0
    return q


def bell_partial(n: int, k: int, x: Sequence):
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) over any commutative ring.

    ``x`` must have exactly ``n - k + 1`` entries.  Multinomial factors are
    integers, so no ring division is needed.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need n >= k >= 0, got n={n}, k={k}")
    if len(x) != n - k + 1:
        raise ValueError(
            f"B_{{{n},{k}}} takes {n - k + 1} arguments, got {len(x)}"
        )
    one = x[0] ** 0
    total = x[0] * 0
    for ells in bell_partitions(n, k):
        term = one
        for xi, l in zip(x, ells):
            if l:
                term = term * xi ** l
        total = total + term * bell_coefficient(n, ells)
    return total
