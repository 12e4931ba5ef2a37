"""Exact Apostol-Bernoulli and Bernoulli polynomials by several closed forms."""

from .apostol import (
    apostol_eval,
    apostol_num_closed,
    apostol_num_det,
    apostol_num_series,
    apostol_num_xuchen,
    apostol_number,
    apostol_oracle_series,
    apostol_poly_closed,
    apostol_poly_det,
    apostol_poly_luo,
    apostol_polynomial,
)
from .classical import (
    bern_num_det,
    bern_num_jks,
    bern_num_qc,
    bern_oracle_series,
    bern_poly_det,
    bern_poly_qc,
    bern_recurrence,
    bernoulli_number,
    bernoulli_polynomial,
)
from .combinatorics import bell_partial, binomial, stirling2, stirling2_sum, stirling2_table
from .core import PoleForm, Poly, Series, SquareMatrix, determinant

__version__ = "0.1.0"
