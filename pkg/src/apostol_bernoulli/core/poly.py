"""Dense univariate polynomials over an arbitrary commutative ring.

Coefficients are stored lowest degree first with trailing zeros stripped, so
the zero polynomial is the empty tuple.  Every polynomial carries the name of
its variable.  Nesting (a polynomial in ``u`` whose coefficients are
polynomials in ``z``) is supported: an operand whose variable differs from
``self.var`` is treated as a scalar of the coefficient ring, and the
``VAR_ORDER`` ranking decides which side is the outer ring when two
polynomials in different variables meet.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable

# Earlier names are outer rings: a ``u``-polynomial may have ``z``-polynomial
# coefficients but not the other way round.
VAR_ORDER = ("u", "z", "y")

NEG_INF = -math.inf


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _rank(var: str) -> int:
    try:
        return VAR_ORDER.index(var)
    except ValueError:
        return len(VAR_ORDER)


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "u"):
        terms = list(coeffs)
        while terms and not terms[-1]:
            terms.pop()
        self.coeffs = tuple(terms)
        self.var = var

    # -- construction helpers -------------------------------------------

    @classmethod
    def monomial(cls, coeff, degree: int, var: str = "u") -> "Poly":
        zero = coeff - coeff
        return cls([zero] * degree + [coeff], var)

    def _same(self, other) -> bool:
        return isinstance(other, Poly) and other.var == self.var

    def _outer(self, other) -> bool:
        """True when ``other`` is a polynomial ring that contains ``self``."""
        return isinstance(other, Poly) and _rank(other.var) < _rank(self.var)

    def _lift(self, scalar) -> "Poly":
        return Poly((scalar,), self.var)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if self._same(other):
            return self.coeffs == other.coeffs
        if isinstance(other, Poly) and _rank(other.var) != _rank(self.var):
            # a polynomial in another variable can only agree as a constant
            if len(self.coeffs) > 1:
                return False
            return (self.coeffs[0] if self.coeffs else 0) == other
        if isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) > 1:
            return False
        return (self.coeffs[0] if self.coeffs else 0) == other

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.var, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations --------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs), self.var)

    # Reflected methods are not tried between two Poly instances, so an
    # outer-ring operand is handed its reflected method explicitly.

    def __add__(self, other) -> "Poly":
        if self._outer(other):
            return other.__radd__(self)
        if not self._same(other):
            other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if self._outer(other):
            return other.__rsub__(self)
        if not self._same(other):
            other = self._lift(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if self._outer(other):
            return other.__rmul__(self)
        if not self._same(other):
            return Poly((c * other for c in self.coeffs), self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                t = ca * cb
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = a[0] - a[0]
        return Poly((zero if c is None else c for c in out), self.var)

    def __rmul__(self, other) -> "Poly":
        return Poly((other * c for c in self.coeffs), self.var)

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def one(self) -> "Poly":
        lead = self.coeffs[-1] if self.coeffs else 1
        return Poly((lead ** 0,), self.var)

    def __truediv__(self, other) -> "Poly":
        """Exact division.

        Division by a coefficient-ring scalar divides every coefficient.
        Division by a polynomial in the same variable is long division that
        must leave no remainder; otherwise ``InexactDivisionError``.
        """
        if self._outer(other):
            return other.__rtruediv__(self)
        if not self._same(other):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly((c / other for c in self.coeffs), self.var)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        if len(other.coeffs) == 1:
            return self / other.coeffs[0]
        q, r = self.divmod(other)
        if r:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return q

    def __rtruediv__(self, other) -> "Poly":
        return self._lift(other) / self

    def divmod(self, other: "Poly"):
        """Long division by ``other``.

        Each step divides by the leading coefficient of ``other`` exactly, so
        over non-fields this only succeeds when the quotient exists.
        """
        b = other.coeffs
        db = len(b) - 1
        rem = list(self.coeffs)
        if len(rem) <= db:
            return Poly((), self.var), self
        lead = b[-1]
        q = [None] * (len(rem) - db)
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[i + db] / lead
            q[i] = c
            if not c:
                continue
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - c * b[j]
        return Poly(q, self.var), Poly(rem[:db], self.var)

    # -- evaluation and mapping ---------------------------------------------

    def map(self, fn: Callable, var: str | None = None) -> "Poly":
        return Poly((fn(c) for c in self.coeffs), var or self.var)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner evaluation.  The zero polynomial evaluates to ``0``."""
        if not self.coeffs:
            return 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc


def zpoly(*coeffs) -> Poly:
    """Polynomial in ``z`` over the rationals, lowest degree first."""
    return Poly((Fraction(c) for c in coeffs), "z")


def upoly(*coeffs) -> Poly:
    """Polynomial in ``u`` over the rationals, lowest degree first."""
    return Poly((Fraction(c) for c in coeffs), "u")


def binomial_power(a, b, n: int, var: str = "u") -> Poly:
    """``(a + b*var)**n`` expanded, for scalar ``a`` and ``b``."""
    from math import comb

    return Poly((comb(n, i) * a ** (n - i) * b ** i for i in range(n + 1)), var)


def format_poly(p: Poly, fmt: Callable | None = None) -> str:
    """Human-readable form such as ``u^2 - u + 1/6``, highest degree first."""
    if fmt is None:
        fmt = _format_scalar
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (p.var if i == 1 else f"{p.var}^{i}")
        text = fmt(c)
        compound = isinstance(c, Poly) and len([x for x in c.coeffs if x]) > 1
        if compound or (not isinstance(c, (int, Fraction)) and "/" in text and mono):
            text = f"({text})"
        if mono:
            if text == "1":
                text = mono
            elif text == "-1":
                text = "-" + mono
            else:
                text = f"{text}*{mono}"
        if parts:
            if text.startswith("-"):
                parts.append(f"- {text[1:]}")
            else:
                parts.append(f"+ {text}")
        else:
            parts.append(text)
    return " ".join(parts)


def _format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}" if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, Poly):
        return format_poly(c)
    return str(c)

