from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apostol_bernoulli.core import SquareMatrix, det_bareiss, det_cofactor, determinant, zpoly

from conftest import polys, rationals

F = Fraction


def test_identity():
    assert determinant(SquareMatrix.from_rows([[F(1), F(0)], [F(0), F(1)]])) == 1


def test_two_by_two():
    m = SquareMatrix.from_rows([[F(1), F(2)], [F(3), F(4)]])
    assert det_bareiss(m) == -2
    assert det_cofactor(m) == -2


def test_kronecker_matrix_n1():
    # single entry C(1,0)(z - delta_{1,0}) = z
    m = SquareMatrix.from_rows([[zpoly(0, 1)]])
    assert determinant(m) == zpoly(0, 1)


def test_zero_pivot_requires_swap():
    m = SquareMatrix.from_rows([[F(0), F(1), F(2)], [F(1), F(0), F(3)], [F(4), F(-3), F(8)]])
    assert det_bareiss(m) == det_cofactor(m) == -2


def test_singular():
    m = SquareMatrix.from_rows([[F(0), F(1)], [F(0), F(5)]])
    assert det_bareiss(m) == 0
    m = SquareMatrix.from_rows([[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]])
    assert det_bareiss(m) == 0


def test_polynomial_entries():
    z = zpoly(0, 1)
    m = SquareMatrix.from_rows([[z, zpoly(1)], [zpoly(1), z]])
    assert det_bareiss(m) == zpoly(-1, 0, 1)


def test_entry_count_checked():
    with pytest.raises(ValueError):
        SquareMatrix(2, (1, 2, 3))
    with pytest.raises(ValueError):
        SquareMatrix.from_rows([[1, 2], [3]])


def test_unknown_method():
    with pytest.raises(ValueError):
        determinant(SquareMatrix.from_rows([[F(1)]]), method="lu")


@st.composite
def matrices(draw, entries=rationals, max_n=5):
    n = draw(st.integers(1, max_n))
    return SquareMatrix(n, tuple(draw(st.lists(entries, min_size=n * n, max_size=n * n))))


@given(matrices())
def test_bareiss_matches_cofactor_rationals(m):
    assert det_bareiss(m) == det_cofactor(m)


@given(matrices(entries=polys("z", max_len=3), max_n=4))
def test_bareiss_matches_cofactor_polynomials(m):
    assert det_bareiss(m) == det_cofactor(m)


@given(matrices(entries=st.sampled_from([F(0), F(1), F(-1)]), max_n=5))
def test_bareiss_sparse(m):
    # many structural zeros exercise the pivot search
    assert det_bareiss(m) == det_cofactor(m)


@given(matrices(), st.data())
def test_alternating(m, data):
    if m.n < 2:
        return
    i = data.draw(st.integers(0, m.n - 1))
    j = data.draw(st.integers(0, m.n - 1).filter(lambda v: v != i))
    assert det_bareiss(m.swap_rows(i, j)) == -det_bareiss(m)
