from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rationals(max_num=10 ** 6, max_den=10 ** 3):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def polys(max_degree=8, var="n"):
    from faulhaber.polyring import Poly

    return st.lists(rationals(50, 6), max_size=max_degree + 1).map(lambda cs: Poly(cs, var))
