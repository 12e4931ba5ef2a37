from fractions import Fraction

from hypothesis import strategies as st

from apostol_bernoulli.core import Poly

small_ints = st.integers(min_value=-12, max_value=12)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=20),
)

nonzero_rationals = rationals.filter(bool)


def polys(var="z", max_len=4, coeffs=rationals):
    return st.lists(coeffs, max_size=max_len).map(lambda cs: Poly(cs, var))
