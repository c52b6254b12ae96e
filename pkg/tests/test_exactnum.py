from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypklein.exactnum import (DomainError, QuadExt, parse_quad, parse_rational, rational_root,
                               render_quad, render_rational)

rats = st.builds(lambda n, d: Fraction(n, d), st.integers(-10**6, 10**6), st.integers(1, 50))


def test_parse_and_render():
    assert parse_rational("-5/12") == Fraction(-5, 12)
    assert parse_rational(" 4/3 ") == Fraction(4, 3)
    assert render_rational(Fraction(6, 4)) == "3/2"


@pytest.mark.parametrize("bad", ["1/0", "a/2", "1//2", ""])
def test_parse_errors(bad):
    with pytest.raises(DomainError):
        parse_rational(bad)


def test_rational_root():
    assert rational_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert rational_root(Fraction(2), 2) is None


def test_quad_golden_ratio():
    g = QuadExt(Fraction(1, 2), Fraction(1, 2))
    assert g * g == g + 1
    assert g.norm() == -1
    assert render_quad(QuadExt(Fraction(11, 2), Fraction(5, 2))) == "11/2+5/2*sqrt(5)"
    assert parse_quad("11/2-5/2*sqrt(5)") == QuadExt(Fraction(11, 2), Fraction(-5, 2))


@given(rats, rats, rats, rats)
def test_quad_field_axioms(a, b, c, d):
    u, v = QuadExt(a, b), QuadExt(c, d)
    assert u * v == v * u
    assert (u + v) - v == u
    if not v.is_zero():
        assert (u / v) * v == u


@given(rats, rats)
def test_render_parse_roundtrip(a, b):
    u = QuadExt(a, b)
    assert parse_quad(render_quad(u)) == (u if b else a)
