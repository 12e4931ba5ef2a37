"""Rational functions in ``z`` whose only pole is at ``z = 1``.

A ``PoleForm`` is ``num(z) / (z - 1)**pole_order`` with ``num`` a rational
polynomial in ``z``.  Values are normalized on construction: factors of
``(z - 1)`` are cancelled from the numerator while a pole remains, so two
equal values always have identical fields.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import InexactDivisionError, Poly, format_poly, zpoly


class NotInvertibleError(ArithmeticError):
    """Raised when an element that is not a unit is inverted."""


Z = zpoly(0, 1)
Z_MINUS_ONE = zpoly(-1, 1)


@lru_cache(maxsize=None)
def _zm1_pow(k: int) -> Poly:
    if k == 0:
        return zpoly(1)
    return _zm1_pow(k - 1) * Z_MINUS_ONE


def _div_z_minus_one(coeffs: tuple) -> tuple:
    """Synthetic division by ``z - 1``; caller guarantees ``num(1) == 0``."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry
        out[i - 1] = carry
    return tuple(out)


def strip_z_minus_one(num: Poly):
    """Split ``num = rest * (z - 1)**j`` with ``rest(1) != 0``; return ``(rest, j)``."""
    coeffs = num.coeffs
    j = 0
    while coeffs and sum(coeffs) == 0:
        coeffs = _div_z_minus_one(coeffs)
        j += 1
    return Poly(coeffs, "z"), j


def poleform_normalize(num: Poly, pole_order: int) -> "PoleForm":
    return PoleForm(num, pole_order)


class PoleForm:
    __slots__ = ("num", "pole_order")

    def __init__(self, num=0, pole_order: int = 0):
        if pole_order < 0:
            raise ValueError("pole order must be nonnegative")
        if isinstance(num, Poly):
            if num.var != "z":
                raise TypeError(f"numerator must be a polynomial in z, got {num.var}")
        else:
            num = zpoly(num)
        coeffs = num.coeffs
        if not coeffs:
            pole_order = 0
        while pole_order and sum(coeffs) == 0:
            coeffs = _div_z_minus_one(coeffs)
            pole_order -= 1
        self.num = num if coeffs is num.coeffs else Poly(coeffs, "z")
        self.pole_order = pole_order

    @staticmethod
    def _coerce(other):
        if isinstance(other, PoleForm):
            return other
        if isinstance(other, (int, Fraction)):
            return PoleForm(zpoly(other))
        if isinstance(other, Poly) and other.var == "z":
            return PoleForm(other)
        return None

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.pole_order == other.pole_order and self.num == other.num

    def __hash__(self) -> int:
        if self.pole_order == 0:
            return hash(self.num)
        return hash((self.num, self.pole_order))

    def __repr__(self) -> str:
        return f"PoleForm({list(self.num.coeffs)!r}, pole_order={self.pole_order})"

    def __str__(self) -> str:
        return format_poleform(self)

    def __neg__(self) -> "PoleForm":
        return PoleForm(-self.num, self.pole_order)

    def __add__(self, other) -> "PoleForm":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        e = max(self.pole_order, other.pole_order)
        a = self.num if self.pole_order == e else self.num * _zm1_pow(e - self.pole_order)
        b = other.num if other.pole_order == e else other.num * _zm1_pow(e - other.pole_order)
        return PoleForm(a + b, e)

    __radd__ = __add__

    def __sub__(self, other) -> "PoleForm":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PoleForm":
        return (-self) + other

    def __mul__(self, other) -> "PoleForm":
        if isinstance(other, (int, Fraction)):
            return PoleForm(self.num * other, self.pole_order)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PoleForm(self.num * other.num, self.pole_order + other.pole_order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PoleForm":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        return PoleForm(self.num ** e, self.pole_order * e)

    def __truediv__(self, other) -> "PoleForm":
        """Exact division within the ring ``Q[z, 1/(z-1)]``."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero pole form")
        rest, j = strip_z_minus_one(other.num)
        # other = rest * (z-1)**(j - other.pole_order)
        num = self.num / rest
        shift = other.pole_order - j
        if shift >= 0:
            return PoleForm(num * _zm1_pow(shift), self.pole_order)
        return PoleForm(num, self.pole_order - shift)

    def __rtruediv__(self, other) -> "PoleForm":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def invert_unit(self) -> "PoleForm":
        """Inverse of ``c * (z - 1)**j``; anything else raises NotInvertibleError."""
        rest, j = strip_z_minus_one(self.num)
        if len(rest.coeffs) != 1:
            raise NotInvertibleError(f"{self} is not a constant times a power of (z-1)")
        c = rest.coeffs[0]
        shift = self.pole_order - j
        if shift >= 0:
            return PoleForm(_zm1_pow(shift) / c, 0)
        return PoleForm(zpoly(1 / c), -shift)

    def evaluate(self, z) -> Fraction:
        z = Fraction(z)
        if self.pole_order and z == 1:
            raise ZeroDivisionError("pole form evaluated at its pole z = 1")
        value = Fraction(self.num.evaluate(z))
        if self.pole_order:
            value /= (z - 1) ** self.pole_order
        return value

    def __call__(self, z) -> Fraction:
        return self.evaluate(z)


def poleform_arith(a: PoleForm, b: PoleForm, op: str) -> PoleForm:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poleform_invert_unit(a: PoleForm) -> PoleForm:
    return a.invert_unit()


def format_poleform(p: PoleForm) -> str:
    """``-2*z/(z-1)^2`` style text; the numerator is parenthesized when compound."""
    num = format_poly(p.num)
    if p.pole_order == 0:
        return num
    if len([c for c in p.num.coeffs if c]) > 1:
        num = f"({num})"
    den = "(z-1)" if p.pole_order == 1 else f"(z-1)^{p.pole_order}"
    return f"{num}/{den}"


__all__ = [
    "InexactDivisionError",
    "NotInvertibleError",
    "PoleForm",
    "Z",
    "Z_MINUS_ONE",
    "format_poleform",
    "poleform_arith",
    "poleform_invert_unit",
    "poleform_normalize",
    "strip_z_minus_one",
]
