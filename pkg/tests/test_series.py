from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypklein.exactnum import DomainError
from hypklein.series import TruncSeries, poly_on_series

small = st.builds(lambda n, d: Fraction(n, d), st.integers(-20, 20), st.integers(1, 9))


def ser(cs):
    return TruncSeries.from_list([Fraction(c) for c in cs])


def test_binomial_power():
    # (1 - 2t)^(-1/4) = 1 + t/2 + 5t^2/8 + ...
    s = ser([1, -2, 0, 0, 0]) ** Fraction(-1, 4)
    assert s.dense(0, 3) == [1, Fraction(1, 2), Fraction(5, 8)]


def test_offset_tracking():
    t = TruncSeries.variable(6)
    s = t ** Fraction(1, 3)
    assert s.offset == Fraction(1, 3)
    assert (s * s * s).offset == 0 and (s * s * s).val == 1


def test_offset_mismatch_add():
    t = TruncSeries.variable(6)
    with pytest.raises(DomainError):
        t ** Fraction(1, 3) + t


def test_log_exp_derivative():
    s = ser([1, 3, -1, 2, 5, 0, 1])
    lg = s.log()
    assert (lg.derivative() * s).truncate(5) == s.derivative().truncate(5)


def test_revert():
    s = ser([0, 2, 1, -1, 0, 3, 0, 0])
    r = s.revert()
    assert s.compose(r).truncate(7) == TruncSeries.variable(7)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=3, max_size=7), st.lists(small, min_size=3, max_size=7))
def test_mul_commutes_and_inverse(a, b):
    a = [Fraction(1)] + a
    x, y = ser(a), ser([1] + b)
    assert x * y == y * x
    assert (x * x.inverse()).truncate(len(a)) == TruncSeries.constant(Fraction(1), len(a))


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=4, max_size=6), st.integers(1, 4))
def test_rational_power_composes(cs, n):
    s = ser([1] + cs)
    e = Fraction(1, n)
    assert (s ** e) ** n == s.truncate(s.prec)


def test_poly_on_series():
    t = TruncSeries.variable(5)
    p = poly_on_series([Fraction(1), Fraction(2), Fraction(1)], t, 5)  # (1+t)^2
    assert p.dense(0, 4) == [1, 2, 1, 0]
