from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hypklein.curves import E3, E4, E5, E6, RATIONAL, CurveFunction, curve_reduce
from hypklein.exactnum import DomainError, QuadExt
from hypklein.polyalg import x, xi


def test_reduce_examples():
    a, b = curve_reduce(xi**2, E6)
    assert a.as_expr().expand() == (x * (1 + x - x**2)).expand() and b.is_zero
    a, b = curve_reduce(xi**3, E6)
    assert a.is_zero and b.as_expr().expand() == (x * (1 + x - x**2)).expand()
    a, b = curve_reduce((3 * xi - 2 * x - x**2) * (3 * xi + 2 * x + x**2), E6)
    assert b.is_zero
    assert a.as_expr().expand() == (9 * x * (1 + x - x**2) - (2 * x + x**2) ** 2).expand()


def test_reduce_idempotent_and_rational_line():
    a, b = curve_reduce(xi**5 + x * xi**2, E4)
    a2, b2 = curve_reduce(a.as_expr() + b.as_expr() * xi, E4)
    assert (a, b) == (a2, b2)
    a, b = curve_reduce(xi + x, RATIONAL)
    assert a.as_expr() == x and b.is_zero


def test_xi_series_on_e6():
    s = CurveFunction.xivar(E6).series(7)
    assert s.dense(0, 7) == [0, 1, 0, F(1, 2), 0, F(-5, 8), 0]


def test_anchor_membership():
    g = QuadExt(F(1, 2), F(1, 2))
    f = CurveFunction.const(1, E6)
    assert f.evaluate(g, 0) == 1
    with pytest.raises(DomainError):
        f.evaluate(g, 1)


coef = st.integers(-4, 4)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([E3, E4, E5, E6]), st.lists(coef, min_size=4, max_size=4))
def test_field_ops_agree_with_series(curve, c):
    f = CurveFunction.from_expr(1 + c[0] * x + c[1] * xi, curve)
    g = CurveFunction.from_expr(1 + c[2] * xi + c[3] * x**2, curve)
    n = 10
    assert (f * g).series(n) == (f.series(n) * g.series(n)).truncate(n)
    assert (f / g).series(n) == (f.series(n) * g.series(n).inverse()).truncate(n)
    assert (f / g) * g == f
