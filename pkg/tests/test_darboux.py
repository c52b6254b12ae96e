from fractions import Fraction as F

import pytest

from hypklein.curves import E6, RATIONAL, CurveFunction
from hypklein.darboux import (RadicalExpr, all_entries, check_entry, evaluate_at_anchor, export_jsonl,
                              import_jsonl, lookup, puiseux_expand, radical_mul)
from hypklein.exactnum import DomainError, QuadExt
from hypklein.polyalg import horner, x
from hypklein.schwarz import TYPES


def test_fourteen_entries_four_evaluations():
    es = all_entries()
    assert len(es) == 14 and all(len(e.evaluations) == 4 for e in es)


def test_lookup_examples():
    e = lookup((F(1, 2), F(1, 3), F(1, 3)))
    assert e.covering == CurveFunction.from_expr("x*(x+4)**3/(4*(2*x-1)**3)", RATIONAL)
    e = lookup((F(1, 5), F(1, 5), F(4, 5)))
    assert e.curve is E6 or e.curve == E6
    e = lookup((F(1, 2), F(1, 3), F(1, 5)))
    assert e.anchor.x == QuadExt(F(11, 2), F(5, 2))
    assert set(e.anchor.z) == {QuadExt(F(11, 2), F(5, 2)), QuadExt(F(11, 2), F(-5, 2))}


def test_phi_leading_term():
    e = lookup((F(1, 2), F(1, 3), F(1, 3)))
    assert e.covering.series(3).dense(0, 2) == [0, -16]


def test_radical_mul():
    one = CurveFunction.const(1, RATIONAL)
    b = CurveFunction.from_expr(1 - 2 * x, RATIONAL)
    r = RadicalExpr(one, ((b, F(-1, 4)),))
    rr = radical_mul(r, r)
    assert rr.factors == ((b, F(-1, 2)),)
    assert radical_mul(r, RadicalExpr.unit(RATIONAL)).factors == r.factors
    s = puiseux_expand(r, 4)
    assert s.dense(0, 3) == [1, F(1, 2), F(5, 8)]


def test_schwarz_map_shape_tetra():
    e = lookup((F(1, 2), F(1, 3), F(1, 3)))
    r = radical_mul(e.evaluations[2].value, e.evaluations[0].value.inverse())
    assert r.as_curve_function() == CurveFunction.from_expr((1 - 2 * x) / (1 + x / 4), RATIONAL)


@pytest.mark.parametrize("ty", TYPES, ids=str)
def test_database_identities_order_20(ty):
    assert all(m is None for _, m in check_entry(lookup(ty), 20))


@pytest.mark.parametrize("ty", TYPES, ids=str)
def test_anchor_on_curve_and_over_zero(ty):
    e = lookup(ty)
    if not e.curve.is_rational:
        assert horner(e.curve.q_poly, e.anchor.x) == e.anchor.xi * e.anchor.xi
    assert e.covering.evaluate(e.anchor.x, e.anchor.xi) == 0


@pytest.mark.parametrize("ty", [t for t in TYPES if t.m == 5], ids=str)
def test_automorphism_preserves_covering(ty):
    e = lookup(ty)
    assert e.covering.compose_aut(*e.automorphism) == e.covering


def test_anchor_pole_is_reported():
    e = lookup((F(1, 2), F(1, 3), F(1, 3)))
    f = CurveFunction.from_expr(1 / (x + 4), RATIONAL)
    with pytest.raises(DomainError, match="anchor unusable"):
        evaluate_at_anchor(f, e.anchor)


def test_export_roundtrip_bit_exact():
    text = export_jsonl()
    parsed = import_jsonl(text)
    assert len(parsed) == 56
    from hypklein.darboux import records_from_parsed
    import json
    again = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records_from_parsed(parsed))
    assert again == text


def test_mutated_entry_is_caught():
    from hypklein.darboux import _RAW, _build
    raw = list(_RAW[4])
    evs = [list(v) for v in raw[3]]
    evs[3][3] = "1+435*x-6670*x**2-3335*x**4-88*x**5"
    raw[3] = [tuple(v) for v in evs]
    res = check_entry(_build(tuple(raw)), 20)
    assert res[3][1] is not None and all(m is None for _, m in res[:3])
