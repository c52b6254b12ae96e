from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from hypklein.curves import RATIONAL, CurveFunction
from hypklein.darboux import standard_covering
from hypklein.exactnum import DomainError
from hypklein.polyalg import s as S, x
from hypklein.schwarz import (TYPES, ExponentTriple, Group, Rejection, assign_points, classify,
                              covering_degree, standard_invariant)


def t(text):
    return ExponentTriple.parse(text)


@pytest.mark.parametrize("text,rep,deg", [
    ("1/2,1/3,2/3", (F(1, 2), F(1, 3), F(1, 3)), 3),
    ("2/3,4/3,4/3", (F(1, 3), F(1, 3), F(2, 3)), 14),
    ("1/5,1/5,6/5", (F(1, 5), F(1, 5), F(4, 5)), 18),
    ("1/2,2/3,1/5", (F(1, 2), F(1, 3), F(1, 5)), 11),
])
def test_classify_examples(text, rep, deg):
    ty = classify(t(text))
    assert sorted(ty.representative.as_tuple()) == sorted(rep)
    assert covering_degree(t(text), ty.m) == deg


@pytest.mark.parametrize("text,why", [
    ("1/2,1/2,1/7", Rejection.DIHEDRAL),
    ("1/3,1/3,1/3", Rejection.CYCLIC),
    ("1,1/3,1/3", Rejection.CYCLIC),
    ("1/2,1/3,1/7", Rejection.NOT_ALGEBRAIC),
])
def test_rejections(text, why):
    assert classify(t(text)) is why


def test_parse_error_has_position():
    with pytest.raises(DomainError, match="position"):
        t("1/2,1/q,1/3")


def test_assignment_preferences():
    a = assign_points(t("1/2,1/3,2/3"), classify(t("1/2,1/3,2/3")))[0]
    assert a.triple().as_tuple() == (F(1, 3), F(1, 2), F(2, 3))
    b = assign_points(t("2/3,4/3,4/3"), classify(t("2/3,4/3,4/3")))[0]
    assert b.triple().as_tuple() == (F(4, 3), F(4, 3), F(2, 3))


signs = st.tuples(*[st.sampled_from([1, -1])] * 3)
shifts = st.tuples(*[st.integers(-2, 2)] * 3)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TYPES), st.permutations([0, 1, 2]), signs, shifts)
def test_type_invariant_under_kummer_and_even_shifts(ty, perm, sg, sh):
    if sum(sh) % 2:
        sh = (sh[0] + 1, sh[1], sh[2])
    rep = ty.representative.as_tuple()
    e = tuple(sg[i] * rep[perm[i]] + sh[i] for i in range(3))
    assert classify(e) == ty
    d = covering_degree(e, ty.m)
    assert d >= 1


def _in_z(r, m):
    z = sp.Symbol("z")
    out = []
    for p in (r.num, r.den):
        terms = sp.Poly(p.as_expr(), S).terms()
        assert all(k[0] % m == 0 for k, _ in terms)
        out.append(sum(c * z ** (k[0] // m) for k, c in terms))
    return CurveFunction.from_expr((out[0] / out[1]).subs(z, x), RATIONAL)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_standard_invariant_is_darboux_covering(m):
    assert _in_z(standard_invariant(m), m) == standard_covering(m)


def test_printed_cubic_denominator_is_inconsistent():
    assert _in_z(standard_invariant(3, printed=True), 3) != standard_covering(3)


def test_groups():
    assert [ty.group for ty in TYPES].count(Group.ICOSAHEDRAL) == 10
