from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from apostol_bernoulli.core import (
    NotInvertibleError,
    PoleForm,
    Series,
    exp_series,
    series_div,
    series_mul,
    upoly,
    zpoly,
)

from conftest import nonzero_rationals, rationals

F = Fraction


def test_mul_examples():
    a = Series([F(1), F(1), F(0)])
    b = Series([F(1), F(-1), F(0)])
    assert series_mul(a, b) == Series([1, 0, -1])
    one = Series([F(1), F(0), F(0)])
    assert series_mul(a, one) == a


def test_exp_product_is_one():
    # hand convolution at order <= 2: 1, 1 - 1 = 0, 1/2 - 1 + 1/2 = 0
    a, b = exp_series(F(1), 6), exp_series(F(-1), 6)
    assert series_mul(a, b) == Series([1, 0, 0, 0, 0, 0, 0])


def test_div_geometric():
    one = Series([F(1), 0, 0, 0, 0])
    assert series_div(one, Series([F(1), F(-1), 0, 0, 0])) == Series([1] * 5)
    a = Series([F(2), F(3), F(5), 0, 0])
    assert series_div(a, one) == a


def test_bernoulli_generating_function():
    # x/(e^x - 1) with x cancelled: 1 / sum x^n/(n+1)!
    order = 3
    den = Series([F(1, factorial(n + 1)) for n in range(order + 1)])
    num = Series([F(1)] + [F(0)] * order)
    assert (num / den).egf()[:3] == [1, F(-1, 2), F(1, 6)]


def test_orders_must_match():
    with pytest.raises(ValueError):
        Series([F(1), F(2)]) * Series([F(1)])
    with pytest.raises(ValueError):
        Series([F(1), F(2)]) / Series([F(1)])


def test_non_unit_constant_rejected():
    with pytest.raises(NotInvertibleError):
        Series([F(1), F(1)]) / Series([F(0), F(1)])
    with pytest.raises(NotInvertibleError):
        Series([PoleForm(1)]) / Series([PoleForm(zpoly(0, 1))])
    with pytest.raises(NotInvertibleError):
        Series([upoly(1)]) / Series([upoly(0, 1)])


def test_pole_form_unit_constant():
    zm1 = PoleForm(zpoly(-1, 1))
    q = Series([PoleForm(1), PoleForm(0)]) / Series([zm1, PoleForm(1)])
    assert q[0] == PoleForm(1, 1)
    assert q[1] == PoleForm(-1, 2)


def test_empty_series_rejected():
    with pytest.raises(ValueError):
        Series([])


@st.composite
def series_pair(draw):
    order = draw(st.integers(0, 7))
    a = draw(st.lists(rationals, min_size=order + 1, max_size=order + 1))
    b = [draw(nonzero_rationals)] + draw(st.lists(rationals, min_size=order, max_size=order))
    return Series(a), Series(b)


@given(series_pair())
def test_div_mul_roundtrip(pair):
    a, b = pair
    assert (a / b) * b == a
    assert len(a / b) == len(a)
