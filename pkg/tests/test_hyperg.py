from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hypklein.exactnum import DomainError
from hypklein.hyperg import (HGParams, check_contiguous_by_series, contiguous_express, euler_transform,
                             exponents_from_params, express_in_pair, params_from_exponents, series_2f1,
                             schwarzian_data)
from hypklein.polyalg import RatFunc, X


def test_params_roundtrip():
    p = params_from_exponents((F(1, 3), F(1, 2), F(1, 3)))
    assert p == HGParams(F(-1, 12), F(1, 4), F(2, 3))
    assert exponents_from_params(p).as_tuple() == (F(1, 3), F(1, 2), F(1, 3))


def test_nonpositive_c_rejected():
    with pytest.raises(DomainError):
        HGParams(1, 2, -1)


def test_series_values():
    s = series_2f1(HGParams(1, 1, 2), 5)  # -log(1-X)/X
    assert list(s.coeffs) == [1, F(1, 2), F(1, 3), F(1, 4), F(1, 5)]


def test_euler():
    p = HGParams(F(1, 4), F(-5, 12), F(1, 3))
    q, eps = euler_transform(p)
    assert q == HGParams(F(1, 12), F(3, 4), F(1, 3)) and eps == F(1, 2)


def test_tetra_invariant():
    inv = schwarzian_data((F(1, 3), F(1, 2), F(1, 3)))
    assert inv == RatFunc.from_expr((32 * X**2 - 37 * X + 32) / (72 * X**2 * (X - 1) ** 2), X)


shifts = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))


@settings(max_examples=30, deadline=None)
@given(shifts)
def test_contiguous_by_series(d):
    base = HGParams(F(1, 4), F(7, 12), F(4, 3))
    try:
        target = base.shifted(*d)
    except DomainError:
        return
    rel = contiguous_express(target, base)
    assert check_contiguous_by_series(target, base, rel, order=16) is None


def test_express_in_pair():
    first = HGParams(F(1, 4), F(-1, 12), F(2, 3))
    second = HGParams(F(5, 4), F(-1, 12), F(5, 3))
    target = HGParams(F(1, 4), F(11, 12), F(2, 3))
    u, v = express_in_pair(target, first, second)
    n = 14
    from hypklein.hyperg import ratfunc_series
    from hypklein.series import TruncSeries
    t = TruncSeries.variable(n)
    lhs = ratfunc_series(u, t, n) * series_2f1(first, n) + ratfunc_series(v, t, n) * series_2f1(second, n)
    assert lhs.truncate(12) == series_2f1(target, 12)
