"""Exact algebraic substrate: rationals, polynomials, pole forms, series, determinants."""

from .matrix import SquareMatrix, det_bareiss, det_cofactor, determinant
from .poleform import (
    NotInvertibleError,
    PoleForm,
    Z,
    Z_MINUS_ONE,
    format_poleform,
    poleform_arith,
    poleform_invert_unit,
    poleform_normalize,
)
from .poly import NEG_INF, InexactDivisionError, Poly, format_poly, upoly, zpoly
from .rational import Rat, format_rat, parse_rat, rat, rat_arith
from .series import Series, exp_series, series_div, series_mul, unit_inverse

__all__ = [
    "InexactDivisionError",
    "NEG_INF",
    "NotInvertibleError",
    "PoleForm",
    "Poly",
    "Rat",
    "Series",
    "SquareMatrix",
    "Z",
    "Z_MINUS_ONE",
    "det_bareiss",
    "det_cofactor",
    "determinant",
    "exp_series",
    "format_poleform",
    "format_poly",
    "format_rat",
    "parse_rat",
    "poleform_arith",
    "poleform_invert_unit",
    "poleform_normalize",
    "rat",
    "rat_arith",
    "series_div",
    "series_mul",
    "unit_inverse",
    "upoly",
    "zpoly",
]
