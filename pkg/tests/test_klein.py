import pytest

from cases import TETRA_BASIC, covering, psi, triple
from hypklein.curves import RATIONAL, E6, CurveFunction
from hypklein.darboux import lookup
from hypklein.klein import (KleinError, compute_covering, derive_identity, eliminate_resultant,
                            eliminate_series, schwarz_quotient, schwarzian_residual, step5)
from hypklein.polyalg import x, xi
from hypklein.schwarz import assign_points, classify


def test_schwarz_quotient_tetra():
    e = triple("1/2,1/3,2/3")
    t = classify(e)
    G1, G2, _ = step5(assign_points(e, t)[0], lookup(t))
    phi = schwarz_quotient(G1, G2, 3)
    ratio = phi / CurveFunction.from_expr(x / (x + 1) ** 3, RATIONAL)
    assert ratio.is_constant()


def test_schwarz_quotient_degenerate():
    e = triple("1/2,1/3,2/3")
    t = classify(e)
    G1, _, _ = step5(assign_points(e, t)[0], lookup(t))
    with pytest.raises(KleinError, match="degenerate"):
        schwarz_quotient(G1, G1, 3)


def test_relation_degree_5_tetrahedral():
    r = covering("1/2,2/3,2/3")
    assert r.phi_relation == CurveFunction.from_expr(x**2 * (x - 5) ** 3 / (5 * x + 2) ** 3, RATIONAL)
    assert r.w == -2


def test_relation_degree_11_icosahedral():
    r = covering("1/2,2/3,1/5")
    assert r.phi_relation == CurveFunction.from_expr(
        x * (11 + 66 * x - x**2) ** 5 / (1 + 66 * x - 11 * x**2) ** 5, RATIONAL)


def test_relation_genus_one_matches_reference_form():
    r = covering("1/5,1/5,6/5")
    printed = CurveFunction.from_expr(
        (1 - x) * (3 * xi - 2 * x - x**2) ** 5 / (x**2 * (1 + x) * (3 * xi + 2 * x - 1) ** 5), E6)
    assert r.phi_relation * r.w == printed


def test_resultant_and_series_routes_agree():
    r = covering("1/2,2/3,2/3")
    ent = lookup(r.type)
    a = eliminate_resultant(ent.covering, r.phi_relation, r.w, 3)
    b = eliminate_series(ent.covering, r.phi_relation, r.w, 3, r.degree)
    assert a == b == r.psi


def test_identity_trivial_standard():
    ident = derive_identity(triple("1/2,1/3,1/3"))
    assert ident.theta == () and ident.psi == psi("X")


def test_out_of_scope():
    with pytest.raises(KleinError, match="dihedral"):
        compute_covering(triple("1/2,1/2,1/7"))


@pytest.mark.parametrize("text", list(TETRA_BASIC))
def test_schwarzian_residual_zero(text):
    r = covering(text)
    assert schwarzian_residual(r.assignment.triple(), r.psi, r.type.m).is_zero()


def test_octahedral_pipeline_consistent():
    # no printed octahedral covering; the pipeline result must pass every oracle
    from hypklein.verify import check_covering
    for text in ("1/2,1/3,1/4", "1/2,1/4,2/3", "3/4,1/3,1/4"):
        r = compute_covering(triple(text))
        assert check_covering(triple(text), r.psi).overall
