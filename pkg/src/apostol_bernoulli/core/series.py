"""Truncated formal power series in ``x`` over a generic coefficient ring."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .poleform import NotInvertibleError, PoleForm
from .poly import Poly


def unit_inverse(c):
    """Multiplicative inverse of a unit of the coefficient ring.

    Rationals need only be nonzero.  Polynomials must be nonzero constants
    with an invertible coefficient.  Pole forms must be a constant times a
    power of ``z - 1``.
    """
    if isinstance(c, PoleForm):
        return c.invert_unit()
    if isinstance(c, Poly):
        if len(c.coeffs) != 1:
            raise NotInvertibleError(f"{c} is not a unit")
        return Poly((unit_inverse(c.coeffs[0]),), c.var)
    if not c:
        raise NotInvertibleError("zero is not a unit")
    return Fraction(1) / c


class Series:
    """Coefficients of ``x**0 .. x**order``.

    Operands must share a truncation order; nothing silently extends or
    shortens precision.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a series needs at least the constant term")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs])

    def scale(self, c) -> "Series":
        return Series([a * c for a in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(len(a)):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out)

    def __truediv__(self, other: "Series") -> "Series":
        self._check(other)
        inv = unit_inverse(other.coeffs[0])
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(len(a)):
            acc = a[k]
            for i in range(1, k + 1):
                acc = acc - b[i] * out[k - i]
            out.append(acc * inv)
        return Series(out)

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            raise ValueError("series exponent must be nonnegative")
        one = self.coeffs[0] ** 0
        zero = self.coeffs[0] - self.coeffs[0]
        result = Series([one] + [zero] * self.order)
        for _ in range(e):
            result = result * self
        return result

    def egf(self) -> list:
        """Coefficients times ``n!``: the sequence this series generates exponentially."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_div(a: Series, b: Series) -> Series:
    return a / b


def exp_series(scale, order: int) -> Series:
    """``exp(scale * x)`` truncated at ``order``; ``scale`` is any ring element."""
    out = []
    power = scale ** 0
    for n in range(order + 1):
        out.append(power * Fraction(1, factorial(n)))
        power = power * scale
    return Series(out)
