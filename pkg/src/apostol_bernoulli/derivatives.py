"""Higher derivatives at a point from derivative sequences.

A derivative sequence is a list whose entry ``j`` is the ``j``-th derivative
of some function at a fixed point (entry 0 is the value).  Two routes to the
derivatives of a reciprocal are provided: Faa di Bruno's formula with partial
Bell polynomials, and the determinant formula for derivatives of a quotient.
They are independent of each other and of series division, which makes them
useful as cross-checks.
"""

from __future__ import annotations

from math import factorial
from typing import Sequence

from .combinatorics import bell_partial, binomial
from .core.matrix import SquareMatrix, determinant
from .core.series import unit_inverse


def faa_di_bruno(f_at_g: Sequence, g: Sequence, n: int):
    """n-th derivative of ``f(g(x))`` at ``x0``.

    ``f_at_g[k]`` is ``f^(k)(g(x0))`` for k = 0..n and ``g[j]`` is
    ``g^(j)(x0)`` for j = 1..n (``g[0]`` is not used).
    """
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if len(f_at_g) < n + 1:
        raise ValueError(f"need f derivatives 0..{n}, got {len(f_at_g)}")
    if n == 0:
        return f_at_g[0]
    if len(g) < n + 1:
        raise ValueError(f"need g derivatives 1..{n}, got {len(g) - 1}")
    total = f_at_g[0] * 0
    # B_{n,0} = 0 for n >= 1
    for k in range(1, n + 1):
        total = total + f_at_g[k] * bell_partial(n, k, g[1:n - k + 2])
    return total


def quotient_matrix(mu: Sequence, nu: Sequence, n: int) -> SquareMatrix:
    """The (n+1)x(n+1) matrix ``[A | B]`` with ``A[l] = mu^(l)`` and ``B[l][m] = C(l,m) nu^(l-m)``."""
    zero = nu[0] * 0
    rows = []
    for l in range(n + 1):
        row = [mu[l]]
        for m in range(n):
            row.append(nu[l - m] * binomial(l, m) if l >= m else zero)
        rows.append(row)
    return SquareMatrix.from_rows(rows)


def quotient_derivative(mu: Sequence, nu: Sequence, n: int):
    """n-th derivative of ``mu / nu`` at ``x0`` as ``(-1)^n det[A | B] / nu^(n+1)``.

    ``nu[0]`` must be a unit of the ring.
    """
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if len(mu) < n + 1 or len(nu) < n + 1:
        raise ValueError(f"need derivatives 0..{n} of both numerator and denominator")
    inv = unit_inverse(nu[0])
    d = determinant(quotient_matrix(mu, nu, n))
    if n % 2:
        d = -d
    return d * inv ** (n + 1)


def leibniz_x_times(h_derivs: Sequence, n: int):
    """n-th derivative of ``x * F(x)`` at 0, which is ``n * F^(n-1)(0)``."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if n == 0:
        return h_derivs[0] * 0 if h_derivs else 0
    if len(h_derivs) < n:
        raise ValueError(f"need F derivatives 0..{n - 1}, got {len(h_derivs)}")
    return h_derivs[n - 1] * n


def reciprocal_derivatives(y0, n: int) -> list:
    """Derivatives of ``1/y`` at ``y0``: ``(-1)^k k! / y0^(k+1)``, k = 0..n."""
    inv = unit_inverse(y0)
    out = []
    power = inv
    for k in range(n + 1):
        out.append(power * ((-1) ** k * factorial(k)))
        power = power * inv
    return out


def denominator_derivatives(z, u, n: int) -> list:
    """Derivatives at 0 of ``z e^{(1-u)x} - e^{-ux}``: ``z (1-u)^j - (-u)^j``, j = 0..n.

    ``z`` and ``u`` are elements of one ring (rationals, or symbols).
    """
    a = 1 - u
    b = -u
    out = []
    pa = a ** 0
    pb = b ** 0
    for _ in range(n + 1):
        out.append(z * pa - pb)
        pa = pa * a
        pb = pb * b
    return out


def apostol_via_faa_di_bruno(n: int, z, u):
    """B_n(u, z) as ``n * (1/g)^(n-1)(0)`` with the reciprocal expanded by Faa di Bruno."""
    if n == 0:
        return (z - z) * u
    g = denominator_derivatives(z, u, n - 1)
    f = reciprocal_derivatives(g[0], n - 1)
    inner = [faa_di_bruno(f, g, j) for j in range(n)]
    return leibniz_x_times(inner, n)


def apostol_via_quotient(n: int, z, u):
    """B_n(u, z) as ``n * (1/g)^(n-1)(0)`` with the reciprocal from the quotient determinant."""
    if n == 0:
        return (z - z) * u
    g = denominator_derivatives(z, u, n - 1)
    one = g[0] ** 0
    zero = g[0] * 0
    mu = [one] + [zero] * (n - 1)
    inner = [quotient_derivative(mu, g, j) for j in range(n)]
    return leibniz_x_times(inner, n)
