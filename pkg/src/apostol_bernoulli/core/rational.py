"""Exact rationals.

``fractions.Fraction`` already keeps numerator and denominator coprime with a
positive denominator, so it is used directly as the rational type.  This
module adds the strict text format used on the command line and in JSON
documents: ``"p/q"`` with ``q >= 2``, or ``"p"`` for integers.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction

Rat = Fraction

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat(value) -> Fraction:
    """Coerce an int, Fraction or rational string to ``Fraction``."""
    if isinstance(value, str):
        return parse_rat(value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.  Decimals and floats are rejected."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rat(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals.

    Division by zero raises ``ZeroDivisionError``.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(Fraction(a), Fraction(b))
