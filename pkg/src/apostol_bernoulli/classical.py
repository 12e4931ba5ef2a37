"""Classical Bernoulli numbers and polynomials.

Closed forms (all for n >= 1):

* ``bern_num_jks``  sum over compositions weighted by 1/(t+1)!
* ``bern_num_qc``   single Stirling sum
* ``bern_poly_qc``  four-fold Stirling sum in u and 1-u
* ``bern_poly_det`` / ``bern_num_det``  n x n determinants

Independent references: ``bern_recurrence`` (sum_k C(n+1,k) B_k = 0) and
``bern_oracle_series`` (series division of x e^{ux} / (e^x - 1)).

B_1 = -1/2 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from .combinatorics import bell_partitions, binomial, stirling2
from .core.matrix import SquareMatrix, determinant
from .core.poly import Poly, upoly
from .core.series import Series, exp_series

NUMBER_FORMULAS = ("jks", "qc", "det", "recurrence", "series")
POLY_FORMULAS = ("qc", "det", "series")

_U = upoly(0, 1)
_ONE_MINUS_U = upoly(1, -1)


@dataclass(frozen=True)
class BernoulliResult:
    n: int
    value: Union[Fraction, Poly]
    formula_tag: str


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"closed forms are stated for n >= 1, got n={n}")


def bern_recurrence(n_max: int) -> list[Fraction]:
    """B_0..B_{n_max} from ``sum_{k=0}^{n} C(n+1, k) B_k = 0``, B_0 = 1."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = sum(binomial(n + 1, k) * out[k] for k in range(n))
        out.append(-s / (n + 1))
    return out


def bern_oracle_series(n_max: int) -> list[Poly]:
    """B_0(u)..B_{n_max}(u) from ``e^{ux} / ((e^x - 1)/x)`` as a series over Q[u]."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    order = n_max + 1
    num = exp_series(_U, order)
    one = upoly(1)
    den = Series([one * Fraction(1, factorial(j + 1)) for j in range(order + 1)])
    return (num / den).egf()[:n_max + 1]


def bern_num_jks(n: int) -> Fraction:
    """n! sum_j (-1)^j sum over (i_1..i_n) with sum i_t = j, sum t i_t = n of
    multinomial(j; i) / prod (t+1)!^{i_t}.

    The constrained vectors are the integer partitions of n, with ``i_t`` the
    multiplicity of part ``t`` and ``j`` the number of parts.
    """
    if n < 1:
        raise ValueError("this formula is stated for n >= 1; B_0 = 1 comes from the recurrence")
    total = Fraction(0)
    for j in range(1, n + 1):
        inner = Fraction(0)
        # with j parts no part exceeds n - j + 1, so the short vectors suffice
        for iv in bell_partitions(n, j):
            den = 1
            for t, i in enumerate(iv, start=1):
                if i:
                    den *= factorial(i) * factorial(t + 1) ** i
            inner += Fraction(factorial(j), den)
        total += inner if j % 2 == 0 else -inner
    return factorial(n) * total


def bern_num_qc(n: int) -> Fraction:
    """sum_{i=1}^{n} (-1)^i C(n+1, i+1) / C(n+i, i) S(n+i, i)."""
    _require_positive(n)
    total = Fraction(0)
    for i in range(1, n + 1):
        term = Fraction(binomial(n + 1, i + 1) * stirling2(n + i, i), binomial(n + i, i))
        total += -term if i % 2 else term
    return total


def _powers(base: Poly, top: int) -> list[Poly]:
    out = [upoly(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def bern_poly_qc(n: int) -> Poly:
    """B_n(u) from the Stirling-sum closed form in ``u^{m+s} (1-u)^{l+r}``."""
    _require_positive(n)
    pu = _powers(_U, 2 * n)
    pv = _powers(_ONE_MINUS_U, 2 * n)
    # collect integer-scaled monomial weights per (m+s, l+r) before expanding
    weights: dict[tuple[int, int], Fraction] = {}
    for k in range(1, n + 1):
        kf = factorial(k)
        for r in range(k + 1):
            s = k - r
            for l in range(n + 1):
                m = n - l
                bracket = 0
                for i in range(r + 1):
                    for j in range(s + 1):
                        t = (
                            binomial(l + r, r - i)
                            * binomial(m + s, s - j)
                            * stirling2(l + i, i)
                            * stirling2(m + j, j)
                        )
                        bracket += -t if (i + j) % 2 else t
                if not bracket:
                    continue
                coeff = Fraction(
                    kf * binomial(n, l) * factorial(l) * factorial(m) * bracket,
                    factorial(l + r) * factorial(m + s),
                )
                if m % 2:
                    coeff = -coeff
                key = (m + s, l + r)
                weights[key] = weights.get(key, 0) + coeff
    result = upoly()
    for (a, b), c in sorted(weights.items()):
        if c:
            result = result + pu[a] * pv[b] * c
    return result


def _det_entry(l: int, m: int) -> Poly:
    c = binomial(l + 1, m)
    if not c:
        return upoly()
    e = l - m + 1
    return (_ONE_MINUS_U ** e - (-_U) ** e) * Fraction(c, l + 1)


def bern_poly_det(n: int) -> Poly:
    """(-1)^n det[ C(l+1,m)/(l+1) ((1-u)^{l-m+1} - (-u)^{l-m+1}) ], l = 1..n, m = 0..n-1."""
    _require_positive(n)
    rows = [[_det_entry(l, m) for m in range(n)] for l in range(1, n + 1)]
    d = determinant(SquareMatrix.from_rows(rows))
    return -d if n % 2 else d


def bern_num_det_matrix(n: int) -> SquareMatrix:
    """Entries C(l+1,m)/(l+1) for m <= l, and 0 for m = l+1.

    This is the polynomial determinant at u = 0, where the factor
    ``(1-u)^{l-m+1} - (-u)^{l-m+1}`` is 1 except at m = l+1 (0^0 - 0^0).
    Keeping C(l+1,l+1)/(l+1) there gives wrong values from n = 3 on.
    """
    return SquareMatrix.from_rows([
        [Fraction(binomial(l + 1, m), l + 1) if m <= l else Fraction(0) for m in range(n)]
        for l in range(1, n + 1)
    ])


def bern_num_det(n: int) -> Fraction:
    """(-1)^n det of ``bern_num_det_matrix(n)``."""
    _require_positive(n)
    rows = bern_num_det_matrix(n).rows()
    d = Fraction(determinant(SquareMatrix.from_rows(rows)))
    return -d if n % 2 else d


def bernoulli_number(n: int, formula: str = "recurrence") -> BernoulliResult:
    """B_n by the named formula.  Closed forms are defined for n >= 1, so B_0 = 1
    is always taken from the recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if formula not in NUMBER_FORMULAS:
        raise ValueError(f"unknown formula {formula!r}; choose from {NUMBER_FORMULAS}")
    if formula == "recurrence" or n == 0:
        value = bern_recurrence(n)[n]
    elif formula == "series":
        value = Fraction(bern_oracle_series(n)[n].evaluate(Fraction(0)))
    else:
        value = {"jks": bern_num_jks, "qc": bern_num_qc, "det": bern_num_det}[formula](n)
    return BernoulliResult(n, value, formula)


def bernoulli_polynomial(n: int, formula: str = "series") -> BernoulliResult:
    """B_n(u) by the named formula; B_0(u) = 1 comes from the series."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if formula not in POLY_FORMULAS:
        raise ValueError(f"unknown formula {formula!r}; choose from {POLY_FORMULAS}")
    if formula == "series" or n == 0:
        value = bern_oracle_series(n)[n]
    elif formula == "qc":
        value = bern_poly_qc(n)
    else:
        value = bern_poly_det(n)
    return BernoulliResult(n, value, formula)
