from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from apostol_bernoulli.apostol import ab_symbols, apostol_oracle_series
from apostol_bernoulli.core import Z, PoleForm, upoly
from apostol_bernoulli.derivatives import (
    apostol_via_faa_di_bruno,
    apostol_via_quotient,
    denominator_derivatives,
    faa_di_bruno,
    leibniz_x_times,
    quotient_derivative,
    reciprocal_derivatives,
)

from conftest import rationals

F = Fraction


def test_fdb_order_zero():
    assert faa_di_bruno([F(7)], [F(3)], 0) == 7


def test_fdb_identity_outer():
    g = [F(1), F(2), F(-3), F(5), F(11)]
    f = [g[0], F(1), F(0), F(0), F(0)]
    for n in range(1, 5):
        assert faa_di_bruno(f, g, n) == g[n]


def test_fdb_reciprocal_of_2ex_minus_1():
    # d/dx 1/(2e^x - 1) at 0: -2e^x/(2e^x - 1)^2 -> -2
    f = [F(1), F(-1), F(2)]
    g = [F(1), F(2), F(2)]
    assert faa_di_bruno(f, g, 1) == -2


def test_fdb_chain_rule_second_order():
    # (f o g)'' = f''(g) g'^2 + f'(g) g''
    f = [F(0), F(3), F(5)]
    g = [F(0), F(2), F(7)]
    assert faa_di_bruno(f, g, 2) == 5 * 4 + 3 * 7


def test_fdb_insufficient_entries():
    with pytest.raises(ValueError):
        faa_di_bruno([F(1)], [F(1), F(1)], 1)
    with pytest.raises(ValueError):
        faa_di_bruno([F(1), F(1), F(1)], [F(1), F(1)], 2)


def test_quotient_order_zero():
    assert quotient_derivative([F(3)], [F(4)], 0) == F(3, 4)


def test_quotient_of_equal_sequences_is_constant():
    nu = [F(2), F(-1), F(5), F(3), F(1)]
    for n in range(1, 5):
        assert quotient_derivative(nu, nu, n) == 0


def test_quotient_reciprocal_of_2ex_minus_1():
    assert quotient_derivative([F(1), F(0)], [F(1), F(2)], 1) == -2


def test_quotient_second_derivative_by_hand():
    # (1/g)'' = 2 g'^2 / g^3 - g'' / g^2 with g = 2e^x - 1 at 0: 8 - 2 = 6
    assert quotient_derivative([F(1), F(0), F(0)], [F(1), F(2), F(2)], 2) == 6


def test_quotient_non_unit():
    from apostol_bernoulli.core import NotInvertibleError
    with pytest.raises(NotInvertibleError):
        quotient_derivative([F(1), F(0)], [F(0), F(1)], 1)


def test_leibniz():
    assert leibniz_x_times([F(5)], 1) == 5
    assert leibniz_x_times([F(1), F(3)], 2) == 6
    assert leibniz_x_times([F(1), F(-2)], 2) == -4
    assert leibniz_x_times([F(1)], 0) == 0
    with pytest.raises(ValueError):
        leibniz_x_times([F(1)], 3)


def test_reciprocal_derivatives():
    assert reciprocal_derivatives(F(1), 3) == [1, -1, 2, -6]
    assert reciprocal_derivatives(F(2), 2) == [F(1, 2), F(-1, 4), F(2, 8)]


def test_denominator_derivatives():
    # z e^{(1-u)x} - e^{-ux} at z=2, u=0 is 2e^x - 1
    assert denominator_derivatives(F(2), F(0), 3) == [1, 2, 2, 2]
    assert denominator_derivatives(F(3), F(1, 2), 2) == [2, 2, F(1, 2)]


def test_pathways_apostol_b2_at_2():
    # series oracle x/(2e^x - 1): coefficient of x^2 is -2, times 2!
    assert apostol_via_faa_di_bruno(2, F(2), F(0)) == -4
    assert apostol_via_quotient(2, F(2), F(0)) == -4


@pytest.mark.parametrize("z0", [F(2), F(-1), F(1, 2)])
@pytest.mark.parametrize("u0", [F(0), F(1, 3), F(1)])
def test_pathway_equivalence(z0, u0):
    oracle = apostol_oracle_series(10, z0)
    for n in range(11):
        want = oracle[n].evaluate(u0)
        assert apostol_via_faa_di_bruno(n, z0, u0) == want
        assert apostol_via_quotient(n, z0, u0) == want


def test_pathways_symbolic_agree():
    z, u = ab_symbols()
    oracle = apostol_oracle_series(6)
    for n in range(7):
        assert apostol_via_faa_di_bruno(n, z, u) == oracle[n]
        assert apostol_via_quotient(n, z, u) == oracle[n]


def test_symbolic_rings_work_in_engines():
    # ring = Q[u]: derivatives of 1/(1 + u x) at x = 0 are (-1)^n n! u^n
    u = upoly(0, 1)
    one = upoly(1)
    nu = [one, u] + [upoly()] * 3
    mu = [one] + [upoly()] * 4
    for n in range(5):
        expected = u ** n * ((-1) ** n * factorial(n))
        assert quotient_derivative(mu, nu, n) == expected
        assert faa_di_bruno(reciprocal_derivatives(one, n), nu, n) == expected


@st.composite
def seqs(draw, n):
    head = draw(rationals.filter(bool))
    return [head] + draw(st.lists(rationals, min_size=n, max_size=n))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5), st.data())
def test_quotient_linear_in_numerator(n, data):
    nu = data.draw(seqs(n))
    mu1 = data.draw(st.lists(rationals, min_size=n + 1, max_size=n + 1))
    mu2 = data.draw(st.lists(rationals, min_size=n + 1, max_size=n + 1))
    mu = [a + b for a, b in zip(mu1, mu2)]
    assert quotient_derivative(mu, nu, n) == quotient_derivative(mu1, nu, n) + quotient_derivative(mu2, nu, n)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 6), st.data())
def test_two_routes_to_reciprocal_agree(n, data):
    g = data.draw(seqs(n))
    mu = [F(1)] + [F(0)] * n
    via_fdb = faa_di_bruno(reciprocal_derivatives(g[0], n), g, n)
    assert via_fdb == quotient_derivative(mu, g, n)


def test_pole_form_ring():
    # 1/g with g = z e^x - 1 at u = 0 in the pole-form ring
    z = PoleForm(Z)
    g = [z - 1, z, z]
    mu = [PoleForm(1), PoleForm(0), PoleForm(0)]
    assert quotient_derivative(mu, g, 1) == faa_di_bruno(reciprocal_derivatives(g[0], 1), g, 1)
    assert quotient_derivative(mu, g, 1) == -z * (z - 1).invert_unit() ** 2
