"""JSON-ready encodings for rationals, polynomials and pole forms.

Rationals are ``"p/q"`` strings (``"p"`` when integral).  A polynomial is a
list of rational strings indexed by degree.  A pole form is
``{"num": [...], "pole_order": e}``.
"""

from __future__ import annotations

from fractions import Fraction

from .poleform import PoleForm
from .poly import Poly
from .rational import format_rat, parse_rat


def poly_to_json(p: Poly) -> list[str]:
    return [format_rat(c) for c in p.coeffs]


def poly_from_json(data, var: str = "u") -> Poly:
    return Poly((parse_rat(s) for s in data), var)


def poleform_to_json(p: PoleForm) -> dict:
    return {"num": poly_to_json(p.num), "pole_order": p.pole_order}


def poleform_from_json(data: dict) -> PoleForm:
    return PoleForm(poly_from_json(data["num"], "z"), int(data["pole_order"]))


def abpoly_to_json(p: Poly, n: int, formula: str) -> dict:
    """Document for a polynomial in ``u`` with pole-form coefficients."""
    return {
        "n": n,
        "formula": formula,
        "u_coeffs": [poleform_to_json(_as_poleform(c)) for c in p.coeffs],
    }


def abpoly_from_json(data: dict) -> Poly:
    return Poly((poleform_from_json(c) for c in data["u_coeffs"]), "u")


def _as_poleform(c) -> PoleForm:
    if isinstance(c, PoleForm):
        return c
    if isinstance(c, (int, Fraction)) or isinstance(c, Poly):
        return PoleForm(c)
    raise TypeError(f"cannot encode {c!r} as a pole form")
