"""Klein pull-back coverings from Darboux evaluations.

Pipeline for an exponent triple:

0-1. classify, order the exponent differences over X = 0, 1, oo;
2-4. fetch the Darboux data of the type and of the standard equation;
5.   write G1 = 2F1(a, b; c; X) and G2 = X^(1-c) 2F1(1+a-c, 1+b-c; 2-c; X)
     through contiguous relations as radical expressions on the Darboux curve;
6.   (G2/G1)^m is rational on the curve, equal to z/w; fix w at an anchor;
7.   eliminate the curve to get Z = psi(X).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp
from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from .curves import CurveFunction, CurveSpec
from .darboux import (RadicalExpr, DarbouxEntry, evaluate_at_anchor, lookup, puiseux_expand,
                      radical_mul, standard_covering)
from .exactnum import DomainError, QuadExt, rational_root
from .hyperg import (ContiguityError, HGParams, euler_transform, express_in_pair, is_contiguous,
                     params_from_exponents, schwarzian_data, schwarzian_derivative, series_2f1)
from .polyalg import (INF, RatFunc, X, Z, as_fraction, extract_linear_factor, ramification_pattern,
                      resultant, squarefree_part, x)
from .schwarz import (ExponentTriple, PointAssignment, Rejection, SchwarzType, assign_points, classify,
                      covering_degree, standard_triple)
from .series import TruncSeries, poly_on_series


class KleinError(DomainError):
    pass


@dataclass
class PullbackResult:
    exponents: ExponentTriple
    type: SchwarzType
    assignment: PointAssignment
    psi: RatFunc
    degree: int
    w: object
    phi_relation: CurveFunction  # Phi with z = w * Phi(x, xi)
    ramification: dict  # "0" / "1" / "inf" -> descending multiplicity list
    method: str
    w_candidates: tuple = ()

    @property
    def curve(self) -> CurveSpec:
        return self.phi_relation.curve


@dataclass
class TransformationIdentity:
    lhs_params: HGParams
    theta: tuple  # ((Poly in X with constant term 1, Fraction exponent), ...)
    rhs_params: HGParams
    psi: RatFunc

    def theta_series(self, order: int) -> TruncSeries:
        t = TruncSeries.variable(order)
        acc = TruncSeries.constant(Fraction(1), order)
        for f, k in self.theta:
            fs = poly_on_series([as_fraction(c) for c in f.all_coeffs()[::-1]], t, order)
            acc = (acc * fs ** k).truncate(order)
        return acc


# --- helpers ----------------------------------------------------------------

def _poly_on_cf(p: Poly, f: CurveFunction) -> CurveFunction:
    acc = CurveFunction.const(0, f.curve)
    for c in p.all_coeffs():
        acc = acc * f + CurveFunction.const(as_fraction(c), f.curve)
    return acc


def ratfunc_on_curve(r: RatFunc, f: CurveFunction) -> CurveFunction:
    """r(f) for a univariate RatFunc r and a curve function f (homogenized)."""
    deg = max(r.num.degree(), r.den.degree())
    num_f = CurveFunction(f.a, f.b, Poly(1, x, domain=QQ), f.curve, reduce=False)
    den_f = CurveFunction(f.c, Poly(0, x, domain=QQ), Poly(1, x, domain=QQ), f.curve, reduce=False)

    def hom(p: Poly):
        cs = p.all_coeffs()[::-1]
        acc = CurveFunction.const(0, f.curve)
        npow = CurveFunction.const(1, f.curve)
        dpows = [CurveFunction.const(1, f.curve)]
        for _ in range(deg):
            dpows.append(dpows[-1] * den_f)
        for i in range(deg + 1):
            c = cs[i] if i < len(cs) else 0
            if c:
                acc = acc + npow * dpows[deg - i] * as_fraction(c)
            npow = npow * num_f
        return acc

    return hom(r.num) / hom(r.den)


def _variants(p: HGParams):
    """(params, euler exponent) with 2F1(p; X) = (1-X)^eps 2F1(params; X)."""
    out = [(p, Fraction(0)), (p.swapped(), Fraction(0))]
    q, eps = euler_transform(p)
    out += [(q, eps), (q.swapped(), eps)]
    return out


@dataclass
class ContiguityUse:
    """Record of one contiguous relation used in Step 5."""

    target: HGParams
    first: HGParams
    second: HGParams
    u: RatFunc
    v: RatFunc
    euler: Fraction


def darboux_value(p: HGParams, entry: DarbouxEntry, avoid=None):
    """2F1(p; phi) as a RadicalExpr on the entry's curve, with the relation used.

    ``avoid`` is a pair index to skip (G1 and G2 must use different orbits).
    """
    phi = entry.covering
    tried = []
    for q, eps in _variants(p):
        for k, (E0, E1) in enumerate(entry.pairs()):
            if k == avoid:
                continue
            for P0, P1, R0, R1 in ((E0.params, E1.params, E0.value, E1.value),
                                   (E1.params, E0.params, E1.value, E0.value)):
                for sw in (False, True):
                    A, B = (P0.swapped(), P1.swapped()) if sw else (P0, P1)
                    if not (is_contiguous(q, A) and is_contiguous(q, B)):
                        continue
                    tried.append((q, A, B))
                    try:
                        u, v = express_in_pair(q, A, B)
                    except ContiguityError:
                        continue
                    ratio = radical_mul(R1, R0.inverse()).as_curve_function()
                    coef = ratfunc_on_curve(u, phi) + ratfunc_on_curve(v, phi) * ratio
                    if coef.is_zero():
                        continue
                    val = radical_mul(R0, RadicalExpr(coef))
                    if eps:
                        val = radical_mul(val, RadicalExpr(CurveFunction.const(1, phi.curve),
                                                           ((1 - phi, eps),)))
                    return val, k, ContiguityUse(q, A, B, u, v, eps)
    raise KleinError(f"{p} is not contiguous to any database orbit of {entry.type} "
                     f"(attempts: {len(tried)})")


def _root_on_rational_curve(factors, D, curve) -> CurveFunction:
    """prod base^(n/D) as a rational function, via factorization over Q."""
    expo = {}
    const = Fraction(1)
    for b, e in factors:
        for p, pe in ((b.a, e), (b.c, -e)):
            c, fl = p.factor_list()
            const_c = as_fraction(c)
            for f, k in fl:
                f0 = as_fraction(f.eval(0)) if f.degree() > 0 else as_fraction(f.LC())
                if f0 == 0:
                    s_ = as_fraction(f.LC())
                    fn = f.quo_ground(f.LC())
                else:
                    s_ = f0
                    fn = f.quo_ground(f.eval(0))
                const_c *= s_**k
                key = fn.as_expr()
                expo[key] = expo.get(key, Fraction(0)) + pe * k
            if const_c != 1:
                const = const * _frac_power(const_c, pe)
    out = CurveFunction.const(const, curve)
    for key, e in expo.items():
        if e.denominator != 1:
            raise KleinError(f"fractional power {e} of {key} does not cancel")
        if e:
            out = out * CurveFunction.from_expr(key, curve) ** int(e)
    return out


def _frac_power(c: Fraction, e: Fraction) -> Fraction:
    r = rational_root(c, e.denominator) if c > 0 else None
    if r is None:
        if c < 0 and e.denominator % 2 == 1:
            r = -rational_root(-c, e.denominator)
        else:
            raise KleinError(f"constant {c}^{e} is not rational")
    return r**e.numerator


def _solve_nullspace(rows, ncols):
    M = DomainMatrix([[QQ(v.numerator, v.denominator) for v in r] for r in rows],
                     (len(rows), ncols), QQ)
    ns = M.nullspace()
    return [[as_fraction(c) for c in row] for row in ns.to_Matrix().tolist()] if ns.shape[0] else []


def _root_on_genus1_curve(factors, curve, max_deg: int = 40) -> CurveFunction:
    """prod base^e as (A + B xi)/C, reconstructed from its series and checked exactly."""
    D = 1
    for _, e in factors:
        D = math.lcm(D, e.denominator)
    target = RadicalExpr(CurveFunction.const(1, curve), tuple(factors))
    power = RadicalExpr(CurveFunction.const(1, curve), tuple((b, e * D) for b, e in factors))
    exact = power.as_curve_function()
    n = 2
    while n <= max_deg:
        prec = 6 * n + 12
        L = puiseux_expand(target, prec)
        if L.offset:
            raise KleinError("leftover radical has a fractional leading power")
        xs, xis = uniformizer_series(curve, prec)
        cols = []
        tpow = []
        pw = TruncSeries.constant(Fraction(1), prec)
        for _ in range(n + 1):
            tpow.append(pw)
            pw = (pw * xs).truncate(prec)
        # unknowns: C_0..C_n, A_0..A_n, B_0..B_n ; C*L - A - B*xi = O(t^prec)
        for k in range(n + 1):
            cols.append((tpow[k] * L).truncate(prec))
        for k in range(n + 1):
            cols.append(-tpow[k])
        for k in range(n + 1):
            cols.append(-(tpow[k] * xis).truncate(prec))
        lo = min(c.val for c in cols if c.coeffs) if cols else 0
        rows = [[c.coefficient(i) if i < c.prec else Fraction(0) for c in cols] for i in range(lo, prec)]
        ns = _solve_nullspace(rows, len(cols))
        for vec in ns:
            C = Poly(sum(sp.Rational(vec[k]) * x**k for k in range(n + 1)), x, domain=QQ)
            A = Poly(sum(sp.Rational(vec[n + 1 + k]) * x**k for k in range(n + 1)), x, domain=QQ)
            B = Poly(sum(sp.Rational(vec[2 * n + 2 + k]) * x**k for k in range(n + 1)), x, domain=QQ)
            if C.is_zero:
                continue
            F = CurveFunction(A, B, C, curve)
            if F ** D == exact:
                return F
        n += 2
    raise KleinError("could not reconstruct the leftover radical as a curve function")


def uniformizer_series(curve, prec):
    from .curves import uniformizer
    return uniformizer(curve, prec)


def schwarz_quotient(G1: RadicalExpr, G2: RadicalExpr, m: int) -> CurveFunction:
    """Phi = (G2/G1)^m as a rational function on the curve."""
    q = radical_mul(G2, G1.inverse())
    if not q.factors and q.rational.is_constant():
        raise KleinError("degenerate Schwarz quotient: G1 and G2 are proportional")
    q = (q ** m).fold_integral()
    if not q.factors:
        return q.rational
    curve = q.curve
    D = 1
    for _, e in q.factors:
        D = math.lcm(D, e.denominator)
    if curve.is_rational:
        left = _root_on_rational_curve(q.factors, D, curve)
    else:
        left = _root_on_genus1_curve(list(q.factors), curve)
    return q.rational * left


def _int_content(p: Poly):
    """(scale, primitive integer polynomial with positive leading coefficient) with p = scale * prim."""
    if p.is_zero:
        return Fraction(1), p
    cs = [as_fraction(c) for c in p.all_coeffs()]
    den = 1
    for c in cs:
        den = math.lcm(den, c.denominator)
    nums = [int(c * den) for c in cs]
    g = 0
    for v in nums:
        g = math.gcd(g, v)
    sign = -1 if nums[0] < 0 else 1
    scale = Fraction(g * sign, den)
    return scale, p.quo_ground(QQ(scale.numerator, scale.denominator))


def normalize_relation(phi: CurveFunction) -> tuple[Fraction, CurveFunction]:
    """Split Phi = k * Phi0 with integer-primitive numerator/denominator pieces."""
    if phi.curve.is_rational:
        sn, an = _int_content(phi.a)
        sd, cd = _int_content(phi.c)
        return sn / sd, CurveFunction(an, phi.b, cd, phi.curve, reduce=False)
    # genus 1: numerator a + b*xi made jointly primitive, sign of the x-leading part positive
    sd, cd = _int_content(phi.c)
    cs = [as_fraction(c) for c in phi.a.all_coeffs() + phi.b.all_coeffs() if c != 0]
    den = 1
    for c in cs:
        den = math.lcm(den, c.denominator)
    g = 0
    for c in cs:
        g = math.gcd(g, int(c * den))
    lead = as_fraction(phi.a.LC()) if not phi.a.is_zero else as_fraction(phi.b.LC())
    sn = Fraction(g, den) * (1 if lead > 0 else -1)
    k = QQ(sn.numerator, sn.denominator)
    return sn / sd, CurveFunction(phi.a.quo_ground(k), phi.b.quo_ground(k), cd, phi.curve, reduce=False)


def _z_automorphism(m: int):
    return None if m != 5 else (lambda v: -1 / v)


def determine_w(phi: CurveFunction, entry: DarbouxEntry, m: int):
    """Step 6: w = z_anchor / Phi(anchor); icosahedral anchors must respect the automorphisms."""
    try:
        val = evaluate_at_anchor(phi, entry.anchor)
    except (DomainError, ZeroDivisionError) as exc:
        raise KleinError(f"anchor unusable: {exc}") from None
    if val == 0:
        raise KleinError("anchor unusable: relation vanishes at the anchor")
    cands = [z0 / val for z0 in entry.anchor.z]
    if entry.automorphism is None or len(cands) == 1:
        acc = [w for w in cands if not isinstance(w, QuadExt) or w.is_rational()]
        if not acc:
            raise KleinError(f"no rational w among candidates {cands}")
        return _rat(acc[0]), cands, None
    pulled = phi.compose_aut(*entry.automorphism)
    prod = phi * pulled
    passing = []
    for w in cands:
        if isinstance(w, QuadExt) and not w.is_rational():
            continue
        wr = _rat(w)
        if prod * (wr * wr) == CurveFunction.const(-1, phi.curve):
            passing.append(wr)
    if len(passing) != 1:
        raise KleinError(f"no Klein factor found: w candidates {cands} give {len(passing)} "
                         "automorphism-compatible relations")
    return passing[0], cands, prod


def _rat(w):
    if isinstance(w, QuadExt):
        return w.a
    return Fraction(w)


def automorphism_residual(phi: CurveFunction, entry: DarbouxEntry, w) -> bool:
    """True when w^2 * Phi * (Phi o aut) == -1 (the z -> -1/z compatibility)."""
    if entry.automorphism is None:
        return True
    prod = phi * phi.compose_aut(*entry.automorphism)
    if isinstance(w, QuadExt):
        # compare in Q(sqrt 5): w^2 * prod = -1 iff prod is the constant -1/w^2
        if not prod.is_constant():
            return False
        return as_fraction(prod.a.LC()) / as_fraction(prod.c.LC()) * (w * w) == -1
    return prod * (w * w) == CurveFunction.const(-1, phi.curve)


# --- Step 7 ---------------------------------------------------------------

def eliminate_series(phi_x: CurveFunction, rel: CurveFunction, w, m: int, d: int) -> RatFunc:
    """psi from X(t) = phi_x(t), Z(t) = phi0(w*rel(t)) by exact Pade of type [d/d]."""
    phi0 = standard_covering(m)
    prec = 2 * d + 14
    Xs = phi_x.series(prec)
    R = rel.series(prec).scale(w)
    n0 = [as_fraction(c) for c in phi0.a.all_coeffs()[::-1]]
    d0 = [as_fraction(c) for c in phi0.c.all_coeffs()[::-1]]
    if R.val < 0:
        raise KleinError("relation has a pole at the expansion point")
    Zs = (poly_on_series(n0, R, prec) * poly_on_series(d0, R, prec).inverse()).truncate(prec)
    powers = [TruncSeries.constant(Fraction(1), prec)]
    for _ in range(d):
        powers.append((powers[-1] * Xs).truncate(prec))
    cols = [(p * Zs).truncate(prec) for p in powers] + [-p for p in powers]
    rows = [[c.coefficient(i) if i >= c.val and i < c.prec else Fraction(0) for c in cols]
            for i in range(0, prec)]
    ns = _solve_nullspace(rows, len(cols))
    if len(ns) != 1:
        raise KleinError(f"Pade system has a {len(ns)}-dimensional solution space")
    vec = ns[0]
    den = Poly(sum(sp.Rational(vec[k]) * X**k for k in range(d + 1)), X, domain=QQ)
    num = Poly(sum(sp.Rational(vec[d + 1 + k]) * X**k for k in range(d + 1)), X, domain=QQ)
    return RatFunc(num, den)


def eliminate_resultant(phi_x: CurveFunction, rel: CurveFunction, w, m: int) -> RatFunc:
    """psi from Res_x(X*den(phi) - num(phi), Z*den(g) - num(g)), g = phi0(w*rel); rational curves only."""
    if not phi_x.curve.is_rational:
        raise KleinError("the resultant route needs a rational Darboux curve")
    g = ratfunc_on_curve(RatFunc.from_expr(standard_covering(m).as_expr().subs(x, X), X), rel * w)
    P1 = Poly(X * phi_x.c.as_expr() - phi_x.a.as_expr(), x, X, Z, domain=QQ)
    P2 = Poly(Z * g.c.as_expr() - g.a.as_expr(), x, X, Z, domain=QQ)
    R = resultant(P1, P2, x)
    return extract_linear_factor(squarefree_part(R), X, Z)


def ramification_data(psi: RatFunc) -> dict:
    return {k: ramification_pattern(psi, v) for k, v in (("0", 0), ("1", 1), ("inf", INF))}


def schwarzian_residual(e, psi: RatFunc, m: int) -> RatFunc:
    """I1 - (I0(psi) psi'^2 + {psi, X}); zero exactly for a genuine pull-back."""
    I1 = schwarzian_data(ExponentTriple.of(e).as_tuple())
    I0 = schwarzian_data(standard_triple(m).as_tuple())
    d1 = psi.diff(X)
    return I1 - (I0.compose(psi) * d1 * d1 + schwarzian_derivative(psi))


def _g_params(a: PointAssignment):
    p1 = params_from_exponents(a.triple().as_tuple())
    p2 = HGParams(1 + p1.a - p1.c, 1 + p1.b - p1.c, 2 - p1.c)
    return p1, p2


def step5(assign: PointAssignment, entry: DarbouxEntry):
    """G1, G2 as radical expressions on the Darboux curve (plus the relations used)."""
    p1, p2 = _g_params(assign)
    G1, k1, use1 = darboux_value(p1, entry)
    G2h, k2, use2 = darboux_value(p2, entry, avoid=k1)
    phi = entry.covering
    G2 = radical_mul(G2h, RadicalExpr(CurveFunction.const(1, phi.curve), ((phi, assign.e0),)))
    return G1, G2, (use1, use2)


def compute_covering(e, method: str = "auto", check: bool = True) -> PullbackResult:
    e = ExponentTriple.of(e)
    t = classify(e)
    if isinstance(t, Rejection):
        raise KleinError(f"{t.value}: out of scope")
    m = t.m
    d = covering_degree(e, m)
    entry = lookup(t)
    errors = []
    for assign in assign_points(e, t):
        try:
            G1, G2, _uses = step5(assign, entry)
            raw = schwarz_quotient(G1, G2, m)
            scale, rel = normalize_relation(raw)
            w, cands, _ = determine_w(rel, entry, m)
            if method == "resultant" or (method == "auto" and entry.curve.is_rational and d <= 4):
                psi = eliminate_resultant(entry.covering, rel, w, m)
                used = "resultant"
            else:
                psi = eliminate_series(entry.covering, rel, w, m, d)
                used = "series"
        except KleinError as exc:
            errors.append(f"{assign}: {exc}")
            continue
        if check:
            res = schwarzian_residual(assign.triple(), psi, m)
            if not res.is_zero():
                errors.append(f"{assign}: Schwarzian identity fails")
                continue
            if psi.degree() != d:
                errors.append(f"{assign}: degree {psi.degree()} != {d}")
                continue
        return PullbackResult(e, t, assign, psi, psi.degree(), w, rel, ramification_data(psi),
                              used, tuple(cands))
    raise KleinError("no covering found; " + "; ".join(errors))


# --- transformation identity -------------------------------------------------

def standard_params(m: int) -> HGParams:
    return HGParams(Fraction(1, 12) - Fraction(1, 2 * m), Fraction(5, 12) - Fraction(1, 2 * m),
                    1 - Fraction(1, m))


def _theta_candidates(psi: RatFunc):
    polys = [psi.num, psi.den, psi.num - psi.den]
    seen = {}
    for p in polys:
        for f, _ in p.factor_list()[1]:
            c0 = f.eval(0) if f.degree() > 0 else None
            if c0 is None or c0 == 0:
                continue
            fn = f.quo_ground(c0)
            seen.setdefault(fn.as_expr(), fn)
    return [seen[k] for k in sorted(seen, key=lambda k: (sp.Poly(k, X).degree(), str(k)))]


def derive_identity(e, order: int = 20, result: PullbackResult | None = None) -> TransformationIdentity:
    res = result or compute_covering(e)
    p1, _ = _g_params(res.assignment)
    rhs = standard_params(res.type.m)
    psi = res.psi
    n = order + 4
    t = TruncSeries.variable(n)
    from .hyperg import ratfunc_series
    psis = ratfunc_series(psi, t, n)
    rhs_s = series_2f1(rhs, n).compose(psis).truncate(n)
    lhs_s = series_2f1(p1, n)
    ratio = (lhs_s * rhs_s.inverse()).truncate(n)
    cands = _theta_candidates(psi)
    L = ratio.log()
    logs = [poly_on_series([as_fraction(c) for c in f.all_coeffs()[::-1]], t, n).log() for f in cands]
    rows = []
    for i in range(1, n):
        rows.append([lg.coefficient(i) for lg in logs] + [-L.coefficient(i)])
    ns = _solve_nullspace(rows, len(cands) + 1)
    sol = [v for v in ns if v[-1] != 0]
    if len(sol) != 1:
        raise KleinError("prefactor not of assumed form")
    v = sol[0]
    ks = [c / v[-1] for c in v[:-1]]
    theta = tuple((f, k) for f, k in zip(cands, ks) if k != 0)
    ident = TransformationIdentity(p1, theta, rhs, psi)
    from .verify import check_identity
    rep = check_identity(ident, order)
    if not rep.overall:
        raise KleinError("prefactor not of assumed form")
    return ident


__all__ = [
    "KleinError", "PullbackResult", "TransformationIdentity", "compute_covering", "derive_identity",
    "schwarz_quotient", "step5", "darboux_value", "determine_w", "normalize_relation",
    "eliminate_series", "eliminate_resultant", "schwarzian_residual", "ramification_data",
    "standard_params", "ratfunc_on_curve", "automorphism_residual",
]
