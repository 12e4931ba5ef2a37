"""Square matrices and exact determinants over integral domains."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Sequence


@dataclass(frozen=True)
class SquareMatrix:
    n: int
    entries: tuple  # row-major, length n*n

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise ValueError(
                f"a {self.n}x{self.n} matrix needs {self.n * self.n} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SquareMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("rows must all have length equal to the row count")
        return cls(n, tuple(chain.from_iterable(rows)))

    def rows(self) -> list[list]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.n + j]

    def swap_rows(self, i: int, j: int) -> "SquareMatrix":
        rows = self.rows()
        rows[i], rows[j] = rows[j], rows[i]
        return SquareMatrix.from_rows(rows)

    def map(self, fn) -> "SquareMatrix":
        return SquareMatrix(self.n, tuple(fn(e) for e in self.entries))


def det_bareiss(m: SquareMatrix):
    """Fraction-free Bareiss elimination.

    Every division is exact in the entry ring, which must define ``/`` as
    exact division (``Fraction``, ``Poly``, ``PoleForm`` all do).  A zero
    pivot is replaced by a lower row with a nonzero entry in that column.
    """
    n = m.n
    if n == 0:
        return 1
    a = m.rows()
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                v = row_i[j] * pivot - lead * row_k[j]
                row_i[j] = v if prev is None else v / prev
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det_cofactor(m: SquareMatrix):
    """Laplace expansion along the first row.  Exponential cost; for small n."""
    rows = m.rows()
    if m.n == 0:
        return 1
    return _cofactor(rows)


def _cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j, c in enumerate(rows[0]):
        if not c:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = c * _cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0]
    return total


def determinant(m: SquareMatrix, method: str = "auto"):
    """Exact determinant.  ``auto`` expands cofactors up to 4x4, else Bareiss."""
    if method == "bareiss":
        return det_bareiss(m)
    if method == "cofactor":
        return det_cofactor(m)
    if method != "auto":
        raise ValueError(f"unknown determinant method {method!r}")
    if m.n <= 4:
        return det_cofactor(m)
    return det_bareiss(m)
