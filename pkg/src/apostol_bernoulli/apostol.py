"""Apostol-Bernoulli polynomials B_n(u, z) and numbers B_n(z) = B_n(0, z).

Results are symbolic in both variables: a polynomial in ``u`` whose
coefficients are ``PoleForm`` values ``p(z)/(z-1)^e`` (an "AB polynomial").
All formulas assume z != 1.  At z = 1 the family degenerates to the classical
Bernoulli polynomials, with a jump at n = 0 (B_0(u, 1) = 1 but B_0(u, z) = 0
otherwise), so z = 1 is refused here; use ``classical`` instead.

Formulas:

* ``closed``  Stirling double sum over (r, s) and (l, m)
* ``det``     n x n determinant in u and z; ``apostol_poly_det(n)`` is B_{n+1}
* ``luo``     sum over k of k C(n,k) u^{n-k} times a Stirling sum in z
* ``series``  series division of x e^{ux} by z e^x - 1
* ``faa_di_bruno`` / ``quotient``  the two derivative routes in ``derivatives``

Numbers have ``closed``, ``det``, ``xuchen`` and ``series``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Union

from .combinatorics import binomial, stirling2
from .core.matrix import SquareMatrix, determinant
from .core.poleform import Z, PoleForm
from .core.poly import Poly, upoly, zpoly
from .core.series import Series, exp_series
from .derivatives import apostol_via_faa_di_bruno, apostol_via_quotient

POLY_FORMULAS = ("closed", "det", "luo", "series", "faa_di_bruno", "quotient")
NUMBER_FORMULAS = ("closed", "det", "xuchen", "series")

_U = upoly(0, 1)
_ONE_MINUS_U = upoly(1, -1)
_UZ = Poly((zpoly(0), zpoly(1)), "u")  # u in Q[z][u]
_ONE_MINUS_U_Z = Poly((zpoly(1), zpoly(-1)), "u")  # 1 - u in Q[z][u]


class PoleAtOneError(ValueError):
    """Raised when an Apostol formula is asked for z = 1."""


@dataclass(frozen=True)
class ApostolResult:
    n: int
    value: Union[Poly, PoleForm]
    formula_tag: str


def ab_zero() -> Poly:
    return Poly((), "u")


def ab_symbols() -> tuple[Poly, Poly]:
    """``z`` and ``u`` as AB polynomials, for generic ring code."""
    z = Poly((PoleForm(Z),), "u")
    u = Poly((PoleForm(0), PoleForm(1)), "u")
    return z, u


def _bivariate_over_pole(p: Poly, pole_order: int) -> Poly:
    """Turn a polynomial in u over Q[z] into an AB polynomial divided by (z-1)^pole_order."""
    return Poly((PoleForm(c, pole_order) for c in p.coeffs), "u")


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")


# -- polynomials -------------------------------------------------------------


def apostol_poly_closed(n: int) -> Poly:
    """n sum_{k<n} (-1)^k k!/(z-1)^{k+1} sum_{r+s=k} sum_{l+m=n-1}
    (-1)^{s+m} C(n-1,l) z^r (1-u)^l u^m S(l,r) S(m,s)."""
    _check_index(n)
    if n == 0:
        return ab_zero()
    one_minus_u = [upoly(1)]
    u_pow = [upoly(1)]
    for _ in range(n - 1):
        one_minus_u.append(one_minus_u[-1] * _ONE_MINUS_U)
        u_pow.append(u_pow[-1] * _U)
    result = ab_zero()
    for k in range(n):
        # inner sum as a polynomial in u over Q[z] (integer coefficients)
        inner = Poly((), "u")
        for r in range(k + 1):
            s = k - r
            zr = Poly.monomial(Fraction(1), r, "z")
            for l in range(n):
                m = n - 1 - l
                c = binomial(n - 1, l) * stirling2(l, r) * stirling2(m, s)
                if not c:
                    continue
                if (s + m) % 2:
                    c = -c
                inner = inner + one_minus_u[l] * u_pow[m] * (zr * c)
        scale = (-1) ** k * factorial(k) * n
        result = result + _bivariate_over_pole(inner * scale, k + 1)
    return result


def _det_entry(l: int, m: int) -> Poly:
    c = binomial(l, m)
    if not c:
        return Poly((), "u")
    e = l - m
    return (_ONE_MINUS_U_Z ** e * Z - (-_UZ) ** e) * c


def apostol_poly_det_matrix(n: int) -> SquareMatrix:
    """Entries C(l,m) [z (1-u)^{l-m} - (-u)^{l-m}] over Q[z][u], l = 1..n, m = 0..n-1."""
    return SquareMatrix.from_rows(
        [[_det_entry(l, m) for m in range(n)] for l in range(1, n + 1)]
    )


def apostol_poly_det(n: int) -> Poly:
    """B_{n+1}(u, z) = (-1)^n (n+1)/(z-1)^{n+1} times the determinant above.

    n = 0 uses the empty determinant 1 and yields B_1 = 1/(z-1).
    """
    _check_index(n)
    d = determinant(apostol_poly_det_matrix(n)) if n else Poly((zpoly(1),), "u")
    d = d * ((-1) ** n * (n + 1))
    return _bivariate_over_pole(d, n + 1)


def apostol_poly_luo(n: int) -> Poly:
    """sum_k k C(n,k) sum_{j<k} (-1)^j z^j (z-1)^{-j-1} j! S(k-1,j) u^{n-k}."""
    _check_index(n)
    coeffs = [PoleForm(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = PoleForm(0)
        for j in range(k):
            c = stirling2(k - 1, j)
            if not c:
                continue
            c *= (-1) ** j * factorial(j)
            acc = acc + PoleForm(Poly.monomial(Fraction(c), j, "z"), j + 1)
        coeffs[n - k] = acc * (k * binomial(n, k))
    return Poly(coeffs, "u")


def apostol_oracle_series(n_max: int, z=None) -> list[Poly]:
    """Entries B_0..B_{n_max} from x e^{ux} / (z e^x - 1).

    With ``z=None`` the coefficient ring is AB polynomials and entries are
    symbolic in z.  With a rational ``z != 1`` entries are polynomials in u
    over the rationals.
    """
    _check_index(n_max)
    order = n_max + 1
    if z is None:
        zsym, usym = ab_symbols()
        one = zsym ** 0
        zero = zsym * 0
        e_ux = exp_series(usym, order)
        e_x = exp_series(one, order)
        num = Series([zero] + list(e_ux.coeffs[:-1]))
        den = e_x.scale(zsym) - Series([one] + [zero] * order)
    else:
        z = Fraction(z)
        if z == 1:
            raise PoleAtOneError(
                "z = 1 makes z e^x - 1 vanish at x = 0; use the classical "
                "Bernoulli functions for z = 1"
            )
        one, zero = upoly(1), upoly()
        e_ux = exp_series(_U, order)
        e_x = exp_series(one, order)
        num = Series([zero] + list(e_ux.coeffs[:-1]))
        den = e_x.scale(z) - Series([one] + [zero] * order)
    return (num / den).egf()[:n_max + 1]


# -- numbers -----------------------------------------------------------------


def apostol_num_closed(n: int) -> PoleForm:
    """n sum_{k<n} (-1)^k k! z^k S(n-1,k) / (z-1)^{k+1}."""
    _check_index(n)
    total = PoleForm(0)
    for k in range(n):
        c = stirling2(n - 1, k)
        if not c:
            continue
        c *= (-1) ** k * factorial(k) * n
        total = total + PoleForm(Poly.monomial(Fraction(c), k, "z"), k + 1)
    return total


def apostol_num_det_matrix(n: int) -> SquareMatrix:
    """Entries C(l,m)(z - delta_{lm}) over Q[z], l = 1..n, m = 0..n-1."""
    return SquareMatrix.from_rows([
        [(Z - (1 if l == m else 0)) * binomial(l, m) for m in range(n)]
        for l in range(1, n + 1)
    ])


def apostol_num_det(n: int) -> PoleForm:
    """B_{n+1}(z) = (-1)^n (n+1)/(z-1)^{n+1} det[C(l,m)(z - delta_{lm})].

    n = 0 uses the empty determinant and yields B_1(z) = 1/(z-1).
    """
    _check_index(n)
    d = determinant(apostol_num_det_matrix(n)) if n else zpoly(1)
    return PoleForm(d * ((-1) ** n * (n + 1)), n + 1)


def apostol_num_xuchen(n: int) -> PoleForm:
    """(-1)^{n-1} n sum_{k=1}^{n} (k-1)! S(n,k) / (z-1)^k.  The empty sum gives B_0 = 0."""
    _check_index(n)
    total = PoleForm(0)
    for k in range(1, n + 1):
        total = total + PoleForm(zpoly(factorial(k - 1) * stirling2(n, k)), k)
    sign = 1 if n % 2 else -1
    return total * (sign * n)


def apostol_num_series(n_max: int) -> list[PoleForm]:
    """B_0(z)..B_{n_max}(z) by series division over pole forms (u = 0)."""
    _check_index(n_max)
    order = n_max + 1
    one, zero = PoleForm(1), PoleForm(0)
    z = PoleForm(Z)
    num = Series([zero, one] + [zero] * (order - 1))
    den = exp_series(one, order).scale(z) - Series([one] + [zero] * order)
    return (num / den).egf()[:n_max + 1]


# -- dispatch and evaluation -------------------------------------------------


@lru_cache(maxsize=512)
def apostol_polynomial(n: int, formula: str = "closed") -> ApostolResult:
    """B_n(u, z) by the named formula, as an AB polynomial.

    ``det`` shifts the index internally; at n = 0 it returns the zero
    polynomial, since the determinant form starts at B_1.  Results are
    immutable and memoized.
    """
    _check_index(n)
    if formula == "closed":
        value = apostol_poly_closed(n)
    elif formula == "det":
        value = apostol_poly_det(n - 1) if n else ab_zero()
    elif formula == "luo":
        value = apostol_poly_luo(n)
    elif formula == "series":
        value = apostol_oracle_series(n)[n]
    elif formula in ("faa_di_bruno", "quotient"):
        z, u = ab_symbols()
        fn = apostol_via_faa_di_bruno if formula == "faa_di_bruno" else apostol_via_quotient
        value = fn(n, z, u)
    else:
        raise ValueError(f"unknown formula {formula!r}; choose from {POLY_FORMULAS}")
    return ApostolResult(n, value, formula)


@lru_cache(maxsize=512)
def apostol_number(n: int, formula: str = "closed") -> ApostolResult:
    """B_n(z) by the named formula, as a pole form."""
    _check_index(n)
    if formula == "closed":
        value = apostol_num_closed(n)
    elif formula == "det":
        value = apostol_num_det(n - 1) if n else PoleForm(0)
    elif formula == "xuchen":
        value = apostol_num_xuchen(n)
    elif formula == "series":
        value = apostol_num_series(n)[n]
    else:
        raise ValueError(f"unknown formula {formula!r}; choose from {NUMBER_FORMULAS}")
    return ApostolResult(n, value, formula)


def evaluate_ab(p: Poly, z, u) -> Fraction:
    """Value of an AB polynomial at rational (z, u), z != 1."""
    z, u = Fraction(z), Fraction(u)
    if z == 1:
        raise PoleAtOneError("AB polynomials have a pole at z = 1")
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * u + c.evaluate(z)
    return acc


def specialize_u0(p: Poly) -> PoleForm:
    """The constant coefficient in u, i.e. the value at u = 0."""
    return p.coeffs[0] if p.coeffs else PoleForm(0)


def apostol_eval(n: int, z, u, formula: str = "closed") -> Fraction:
    """B_n(u, z) at rational z != 1 and u by the named formula.

    Number-only formulas (``xuchen``) require u = 0.  The derivative routes
    run directly over the rationals rather than substituting afterwards.
    """
    z, u = Fraction(z), Fraction(u)
    if z == 1:
        raise PoleAtOneError(
            "the Apostol formulas require z != 1; use the classical module for z = 1"
        )
    if formula == "xuchen":
        if u != 0:
            raise ValueError("the xuchen formula gives numbers only; pass u = 0")
        return apostol_num_xuchen(n).evaluate(z)
    if formula == "faa_di_bruno":
        return Fraction(apostol_via_faa_di_bruno(n, z, u))
    if formula == "quotient":
        return Fraction(apostol_via_quotient(n, z, u))
    if formula == "series_at_point":
        return Fraction(apostol_oracle_series(n, z)[n].evaluate(u))
    return evaluate_ab(apostol_polynomial(n, formula).value, z, u)
