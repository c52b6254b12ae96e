"""Embedded database of Darboux coverings and Darboux evaluations.

Each Schwarz type has a curve, a covering ``phi`` to the X-line and four
evaluations ``2F1(a, b; c; phi) = radical expression``.  Entries 0 and 1 are
contiguous to each other, as are entries 2 and 3.  The anchors and
automorphisms fix the constant in the final relation between x and z.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy as sp

from .curves import CURVES, RATIONAL, CurveFunction, CurveSpec
from .exactnum import DomainError, QuadExt, parse_quad, parse_rational, render_quad
from .hyperg import HGParams, series_2f1
from .polyalg import as_fraction, x
from .schwarz import STANDARD, TYPES, SchwarzType, type_by_representative
from .series import TruncSeries

F = Fraction


# --- radical expressions ----------------------------------------------------

@dataclass(frozen=True)
class RadicalExpr:
    """``rational * prod(base_i ** exponent_i)`` on a curve."""

    rational: CurveFunction
    factors: tuple = ()  # ((CurveFunction base, Fraction exponent), ...)

    @property
    def curve(self) -> CurveSpec:
        return self.rational.curve

    @classmethod
    def unit(cls, curve: CurveSpec) -> RadicalExpr:
        return cls(CurveFunction.const(1, curve))

    @classmethod
    def build(cls, curve: CurveSpec, rational, factors) -> RadicalExpr:
        rat = rational if isinstance(rational, CurveFunction) else CurveFunction.from_expr(rational, curve)
        out = cls(rat)
        for base, ex in factors:
            b = base if isinstance(base, CurveFunction) else CurveFunction.from_expr(base, curve)
            out = radical_mul(out, cls(CurveFunction.const(1, curve), ((b, F(ex)),)))
        return out

    def inverse(self) -> RadicalExpr:
        return RadicalExpr(self.rational.inverse(), tuple((b, -e) for b, e in self.factors))

    def __pow__(self, n: int) -> RadicalExpr:
        return RadicalExpr(self.rational ** n, tuple((b, e * n) for b, e in self.factors if e * n))

    def __mul__(self, other):
        if isinstance(other, RadicalExpr):
            return radical_mul(self, other)
        return RadicalExpr(self.rational * other, self.factors)

    def fold_integral(self) -> RadicalExpr:
        """Move integral exponents into the rational part."""
        rat = self.rational
        keep = []
        for b, e in self.factors:
            n = e.numerator // e.denominator
            if n:
                rat = rat * b ** n
            if e - n:
                keep.append((b, e - n))
        return RadicalExpr(rat, tuple(keep))

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self.factors)

    def as_curve_function(self) -> CurveFunction:
        r = self.fold_integral()
        if r.factors:
            raise DomainError("fractional powers did not cancel")
        return r.rational

    def series(self, prec: int) -> TruncSeries:
        return puiseux_expand(self, prec)

    def __str__(self):
        parts = [] if self.rational == 1 else [f"({self.rational})"]
        parts += [f"({b})^({e})" for b, e in self.factors]
        return "*".join(parts) or "1"


def radical_mul(a: RadicalExpr, b: RadicalExpr, curve: CurveSpec | None = None) -> RadicalExpr:
    """Merge factor lists, adding exponents of equal bases; multiply rational parts."""
    if a.curve != b.curve or (curve is not None and curve != a.curve):
        raise DomainError("radical expressions on different curves")
    facs = list(a.factors)
    for base, e in b.factors:
        for i, (bb, ee) in enumerate(facs):
            if bb == base:
                facs[i] = (bb, ee + e)
                break
        else:
            facs.append((base, e))
    return RadicalExpr(a.rational * b.rational, tuple((bb, ee) for bb, ee in facs if ee != 0))


def puiseux_expand(e, prec: int, curve: CurveSpec | None = None) -> TruncSeries:
    """Exact series at x = 0 in the curve's uniformizer, to absolute precision ``prec``.

    Fractional offsets (from bases vanishing at x = 0) are tracked symbolically.
    """
    if isinstance(e, CurveFunction):
        return e.series(prec)
    if not isinstance(e, RadicalExpr):
        raise TypeError("expected RadicalExpr or CurveFunction")
    pad = prec + 4 + 2 * sum(max(b.degree_bound(), 1) for b, _ in e.factors)
    acc = e.rational.series(pad)
    for b, ex in e.factors:
        bs = b.series(pad)
        if bs.is_zero():
            raise DomainError(f"base {b} vanishes identically on the curve")
        acc = acc * bs ** ex
    if acc.prec < prec:
        raise DomainError("insufficient precision in Puiseux expansion")
    return acc.truncate(prec)


# --- database entries -------------------------------------------------------

@dataclass(frozen=True)
class Evaluation:
    params: HGParams
    value: RadicalExpr


@dataclass(frozen=True)
class Anchor:
    x: object  # Fraction or QuadExt
    xi: object
    z: tuple  # admissible z-anchors


@dataclass(frozen=True)
class DarbouxEntry:
    type: SchwarzType
    curve: CurveSpec
    covering: CurveFunction
    evaluations: tuple
    anchor: Anchor
    automorphism: tuple | None = None  # (x-action, xi-action or None) as CurveFunctions
    z_automorphism: str | None = None
    raw: dict = field(default=None, compare=False, repr=False)

    @property
    def representative(self):
        return self.type.representative

    def pairs(self):
        ev = self.evaluations
        return ((ev[0], ev[1]), (ev[2], ev[3]))


# Standard coverings z -> Z for the three groups (same shape as the x-side).
STANDARD_COVERING = {
    3: "x*(x+4)**3/(4*(2*x-1)**3)",
    4: "108*x*(x-1)**4/(x**2+14*x+1)**3",
    5: "1728*x*(x**2-11*x-1)**5/(x**4+228*x**3+494*x**2-228*x+1)**3",
}
Z_ANCHORS = {3: ("-4",), 4: ("1",), 5: ("11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)")}
Z_AUT = {5: "-1/x"}

_P4 = "(1-228*x+494*x**2+228*x**3+x**4)"
_L4 = "(1+522*x-10006*x**2-522*x**3+x**4)"
_PHI1 = "1728*x*(x**2-11*x-1)**5/(x**4+228*x**3+494*x**2-228*x+1)**3"
_E3A = "(1-9*xi+54*x)"
_E3B = "(1+21*xi-117*x+9*x*xi-234*x**2)"
_E4Q = "(1+50*x-125*xi**2-450*x*xi-500*x**2)"
_E4R = "(1+3*xi-20*x)"
_E4S = "(1-3*xi/5-34*x/5)"
_E4T = "(1-95*xi/4+83*x/4+21*xi**2/4+475*x*xi/4+10*x**2)"
_E4U = "(1+18*xi/5-16*x+x**2)"

# (representative, curve, covering, [(a, b, c, rational part, [(base, exponent)])],
#  anchor (x, xi), automorphism (x, xi) or None)
_RAW = [
    ("1/2,1/3,1/3", "P1", "x*(x+4)**3/(4*(2*x-1)**3)", [
        ("1/4", "-1/12", "2/3", "1", [("1-2*x", "-1/4")]),
        ("5/4", "-1/12", "5/3", "(1+x)/(1+x/4)**2", [("1-2*x", "-1/4")]),
        ("1/4", "7/12", "4/3", "1/(1+x/4)", [("1-2*x", "3/4")]),
        ("1/4", "-5/12", "1/3", "1+5*x/2", [("1-2*x", "-5/4")]),
    ], ("-4", "0"), None),
    ("1/3,1/3,2/3", "P1", "x*(x+2)**3/(2*x+1)**3", [
        ("1/2", "-1/6", "2/3", "1", [("1+2*x", "-1/2")]),
        ("1/2", "5/6", "2/3", "1/(1-x)**2", [("1+2*x", "3/2")]),
        ("1/6", "5/6", "4/3", "1/(1+x/2)", [("1+2*x", "1/2"), ("1+x", "1/3")]),
        ("1/6", "-1/6", "1/3", "1", [("1+2*x", "-1/2"), ("1+x", "1/3")]),
    ], ("-2", "0"), None),
    ("1/2,1/3,1/4", "P1", "108*x*(x-1)**4/(x**2+14*x+1)**3", [
        ("7/24", "-1/24", "3/4", "1", [("1+14*x+x**2", "-1/8")]),
        ("7/24", "23/24", "7/4", "(1+2*x-x**2/11)/(1-x)**3", [("1+14*x+x**2", "7/8")]),
        ("5/24", "13/24", "5/4", "1/(1-x)", [("1+14*x+x**2", "5/8")]),
        ("5/24", "-11/24", "1/4", "1-22*x-11*x**2", [("1+14*x+x**2", "-11/8")]),
    ], ("1", "0"), None),
    ("2/3,1/4,1/4", "P1", "27*x*(x+1)**4/(2*(x**2+4*x+1)**3)", [
        ("7/12", "-1/12", "3/4", "1", [("1+x/2", "1/4"), ("1+4*x+x**2", "-1/4")]),
        ("7/12", "11/12", "7/4", "1/(1+x)**3", [("1+x/2", "1/4"), ("1+4*x+x**2", "7/4")]),
        ("1/6", "5/6", "5/4", "1/(1+x)", [("1+2*x", "1/4"), ("1+4*x+x**2", "1/2")]),
        ("1/6", "-1/6", "1/4", "1", [("1+2*x", "1/4"), ("1+4*x+x**2", "-1/2")]),
    ], ("-1", "0"), None),
    ("1/2,1/3,1/5", "P1", _PHI1, [
        ("19/60", "-1/60", "4/5", "1", [(_P4, "-1/20")]),
        ("19/60", "59/60", "4/5", f"(1+66*x-11*x**2)/((1+x**2)*{_L4})", [(_P4, "19/20")]),
        ("11/60", "31/60", "6/5", "1/(1+11*x-x**2)", [(_P4, "11/20")]),
        ("11/60", "-29/60", "1/5", "1+435*x-6670*x**2-3335*x**4-87*x**5", [(_P4, "-29/20")]),
    ], ("11/2+5/2*sqrt(5)", "0"), ("-1/x", None)),
    ("1/2,1/3,2/5", "P1", _PHI1, [
        ("13/60", "-7/60", "3/5", "1-7*x", [(_P4, "-7/20")]),
        ("13/60", "53/60", "3/5", f"(1+119*x+187*x**2+17*x**3)/((1+x**2)*{_L4})", [(_P4, "13/20")]),
        ("17/60", "37/60", "7/5", "(1+x/7)/(1+11*x-x**2)**2", [(_P4, "17/20")]),
        ("17/60", "-23/60", "2/5", "1+207*x-391*x**2+1173*x**3+46*x**4", [(_P4, "-23/20")]),
    ], ("11/2+5/2*sqrt(5)", "0"), ("-1/x", None)),
    ("1/2,1/5,2/5", "P1", "64*x*(x**2-x-1)**5/((x**2-1)*(x**2+4*x-1)**5)", [
        ("7/20", "-1/20", "4/5", "1",
         [("1+x", "7/20"), ("1-x", "-1/20"), ("1-4*x-x**2", "-1/4")]),
        ("7/20", "19/20", "4/5", "(1+3*x)/((1+x**2)*(1+22*x-6*x**2-22*x**3+x**4))",
         [("1+x", "7/20"), ("1-x", "19/20"), ("1-4*x-x**2", "7/4")]),
        ("3/20", "11/20", "6/5", "1/(1+x-x**2)",
         [("1+x", "3/20"), ("1-x", "11/20"), ("1-4*x-x**2", "3/4")]),
        ("3/20", "-9/20", "1/5", "1+12*x-6*x**2-2*x**3-9*x**4",
         [("1+x", "3/20"), ("1-x", "-9/20"), ("1-4*x-x**2", "-9/4")]),
    ], ("1/2+1/2*sqrt(5)", "0"), ("-1/x", None)),
    ("1/3,1/3,2/5", "E3", f"144*xi*(1+33*x-9*x**2)**2*{_E3A}/{_E3B}**3", [
        ("3/10", "-1/30", "3/5", "1", [(_E3A, "1/30"), (_E3B, "-1/10")]),
        ("3/10", "29/30", "3/5",
         "(1+9*x)**2*(1+198*x-99*x**2)/(1-21*xi-117*x-9*x*xi-234*x**2)**2",
         [(_E3B, "9/10"), (_E3A, "-29/30")]),
        ("7/10", "11/30", "7/5", "1/(1+33*x-9*x**2)", [(_E3B, "11/10"), (_E3A, "-11/30")]),
        ("-3/10", "11/30", "2/5", "(1-15*xi-72*x-54*x**2)/(1+9*x)",
         [(_E3A, "19/30"), (_E3B, "-9/10")]),
    ], ("11/6+5/6*sqrt(5)", "0"), ("-1/(9*x)", "xi/(9*x**2)")),
    ("1/3,2/3,1/5", "E3", f"144*xi*(1+33*x-9*x**2)**2*{_E3A}/{_E3B}**3", [
        ("-1/10", "17/30", "4/5", "1", [(_E3A, "13/30"), (_E3B, "-3/10")]),
        ("9/10", "17/30", "9/5", "(1+3*x/7)/(1+33*x-9*x**2)**2",
         [(_E3B, "17/10"), (_E3A, "-17/30")]),
        ("1/10", "23/30", "6/5", "(xi+5*x)/(xi*(1+9*x))", [(_E3B, "3/10"), (_E3A, "7/30")]),
        ("1/10", "-7/30", "1/5", "1-21*x", [(_E3A, "7/30"), (_E3B, "-7/10")]),
    ], ("11/6+5/6*sqrt(5)", "0"), ("-1/(9*x)", "xi/(9*x**2)")),
    ("2/3,1/5,1/5", "E4",
     "432*x*(1-7*xi/5-9*x-x**2)**5*(1+50*x-125*xi**2+450*x*xi-500*x**2)"
     f"/((5*xi+57*x)*{_E4U}**5*{_E4Q})", [
        ("1/6", "-1/30", "4/5", "1", [(_E4S, "1/6"), (_E4R, "-1/6"), (_E4Q, "-1/30")]),
        ("1/6", "29/30", "4/5", f"(1-35*xi/4-101*x/4)/{_E4T}",
         [(_E4R, "5/6"), (_E4S, "1/6"), (_E4Q, "-1/30")]),
        ("1/6", "11/30", "6/5",
         "(1+21*xi/4+41*x/4)/((1-9*x)*(1-7*xi/4-15*x/2)*(1+5*xi+10*x))",
         [(_E4Q, "11/30"), (_E4R, "5/6"), (_E4S, "1/6")]),
        ("1/6", "11/30", "1/5", f"(1+21*xi/4+41*x/4)/({_E4T}*(1+5*xi+10*x))",
         [(_E4Q, "11/30"), (_E4R, "5/6"), (_E4S, "1/6")]),
    ], ("-3/2+7/10*sqrt(5)", "7-3*sqrt(5)"), ("-1/(5*x)", "xi/(5*x**2)")),
    ("1/3,2/5,3/5", "E4",
     "432*x*(1-7*xi/5-9*x-x**2)**5*(1+50*x-125*xi**2+450*x*xi-500*x**2)"
     f"/((5*xi+57*x)*{_E4U}**5*{_E4Q})", [
        ("-1/6", "13/30", "3/5", "(1-3*xi+2*x)/(1+5*xi+10*x)",
         [(_E4Q, "13/30"), (_E4R, "-5/6"), (_E4S, "-1/6")]),
        ("5/6", "13/30", "3/5",
         f"(1-7*xi/4+25*x/2-245*x**2/4)*(1-7*xi/20-79*x/20)/({_E4T}**2*(1-5*x)**2)",
         [(_E4Q, "13/30"), (_E4R, "13/6"), (_E4S, "-1/6")]),
        ("5/6", "7/30", "7/5", "(1+5*xi+10*x)/(1-7*xi/5-9*x-x**2)**2",
         [(_E4Q, "7/30"), (_E4U, "7/6"), ("1+x/25", "5/6"), ("1-5*x", "-7/6")]),
        ("-1/6", "7/30", "2/5", "1-27*xi/5+58*x/5-2*x**2",
         [(_E4Q, "7/30"), (_E4U, "-5/6"), ("1+x/25", "-1/6"), ("1-5*x", "-7/6")]),
    ], ("-3/2+7/10*sqrt(5)", "7-3*sqrt(5)"), ("-1/(5*x)", "xi/(5*x**2)")),
    ("1/3,1/5,3/5", "E5",
     "-54*(xi+5*x)**3*(1-2*xi+6*x)**5/((1-16*x**2)*(xi-5*x)**2*(1-2*xi-14*x)**5)", [
        ("-1/15", "8/15", "4/5", "1",
         [("1+4*x", "8/15"), ("xi+5*x", "1/6"), ("x", "1/15"),
          ("1-2*xi-14*x", "-1/3"), ("xi-3*x", "-3/10")]),
        ("14/15", "8/15", "9/5", "(1+2*xi/3+2*x/3-16*x**2/3)*(xi-5*x)**2/(1-2*xi+6*x)**4",
         [("1-2*xi-14*x", "8/3"), ("1+4*x", "8/15"), ("x", "1/15"),
          ("xi+5*x", "-11/6"), ("xi-3*x", "-3/10")]),
        ("2/15", "11/15", "6/5", "(1-xi+x)/((1+xi+x)*(1-2*xi+6*x))",
         [("1-2*xi-14*x", "2/3"), ("xi+5*x", "1/6"), ("xi-3*x", "13/10"),
          ("1+4*x", "-13/15"), ("x", "-11/15")]),
        ("2/15", "-4/15", "1/5", "(1+3*xi+x)/(1+xi+x)",
         [("1+4*x", "2/15"), ("xi+5*x", "7/6"), ("xi-3*x", "3/10"),
          ("1-2*xi-14*x", "-4/3"), ("x", "-11/15")]),
    ], ("-3/8+1/8*sqrt(5)", "-5/8+3/8*sqrt(5)"), ("1/(16*x)", "-xi/(16*x**2)")),
    ("1/5,1/5,4/5", "E6", "16*xi*(1+x-x**2)**2*(1-xi)**2/((1+xi+2*x)*(1+xi-2*x)**5)", [
        ("7/10", "-1/10", "4/5", "1",
         [("1-xi+2*x", "1/15"), ("1-xi", "3/5"), ("1+xi+2*x", "-7/30"), ("1+xi-2*x", "-1/2")]),
        ("7/10", "9/10", "9/5", "1/(1+x-x**2)**2",
         [("1-xi+2*x", "1/15"), ("1+xi+2*x", "23/30"), ("1+xi-2*x", "7/2"), ("1-xi", "-7/5")]),
        ("1/10", "9/10", "6/5", "(xi+2*x+x**2)/xi",
         [("1+xi", "1/10"), ("1-xi", "3/10"), ("1-xi+2*x", "-1/30"),
          ("1+xi+2*x", "-2/15"), ("1+xi-2*x", "-1/2")]),
        ("1/10", "-1/10", "1/5", "1",
         [("1+xi", "1/10"), ("1-xi", "3/10"), ("1-xi+2*x", "-1/30"),
          ("1+xi+2*x", "-2/15"), ("1+xi-2*x", "-1/2")]),
    ], ("1/2+1/2*sqrt(5)", "0"), ("-1/x", "xi/x**2")),
    ("2/5,2/5,2/5", "E6", "16*xi*(1+x-x**2)**2*(1-xi)**2/((1+xi+2*x)*(1+xi-2*x)**5)", [
        ("3/10", "-1/10", "3/5", "1",
         [("1-xi+2*x", "2/15"), ("1+xi+2*x", "1/30"), ("1-xi", "1/5"), ("1+xi-2*x", "-1/2")]),
        ("3/10", "9/10", "8/5", "(1+xi/2+x/2)/((1+x-x**2)*(1-xi+x-x**2))",
         [("1-xi+2*x", "2/15"), ("1+xi+2*x", "1/30"), ("1-xi", "1/5"), ("1+xi-2*x", "3/2")]),
        ("3/10", "7/10", "7/5", "1/(1+x-x**2)",
         [("1+xi+2*x", "7/30"), ("1+xi", "1/5"), ("1+xi-2*x", "3/2"),
          ("1-xi+2*x", "-1/15"), ("1-xi", "-2/5")]),
        ("3/10", "-3/10", "2/5", "1-3*xi+4*x-2*x**2",
         [("1+xi+2*x", "7/30"), ("1+xi", "1/5"), ("1-xi+2*x", "-1/15"),
          ("1-xi", "-2/5"), ("1+xi-2*x", "-3/2")]),
    ], ("1/2+1/2*sqrt(5)", "0"), ("-1/x", "xi/x**2")),
]


def _coord(text: str):
    q = parse_quad(text)
    if isinstance(q, QuadExt):
        return q.a if q.is_rational() else q
    return Fraction(q)


def _build(raw) -> DarbouxEntry:
    rep, cname, cov, evs, (ax, axi), aut = raw
    curve = CURVES[cname]
    t = type_by_representative(tuple(parse_rational(v) for v in rep.split(",")))
    evals = []
    for a, b, c, rat, facs in evs:
        p = HGParams(parse_rational(a), parse_rational(b), parse_rational(c))
        evals.append(Evaluation(p, RadicalExpr.build(curve, rat, [(bs, parse_rational(e)) for bs, e in facs])))
    autf = None
    if aut is not None:
        autf = (CurveFunction.from_expr(aut[0], curve),
                None if aut[1] is None else CurveFunction.from_expr(aut[1], curve))
    anchor = Anchor(_coord(ax), _coord(axi), tuple(_coord(z) for z in Z_ANCHORS[t.m]))
    return DarbouxEntry(t, curve, CurveFunction.from_expr(cov, curve), tuple(evals), anchor,
                        autf, Z_AUT.get(t.m),
                        raw={"rep": rep, "curve": cname, "covering": cov, "evaluations": evs})


@lru_cache(maxsize=None)
def _entries() -> dict:
    out = {}
    for raw in _RAW:
        e = _build(raw)
        for ev in e.evaluations:
            for b, _ in ev.value.factors:
                if b.series(1).coefficient(0) not in (0, 1):
                    raise DomainError(f"base {b} is not normalized to 1 at x = 0")
        out[e.type] = e
    return out


def lookup(t) -> DarbouxEntry:
    if not isinstance(t, SchwarzType):
        t = type_by_representative(t)
    try:
        return _entries()[t]
    except KeyError:
        raise DomainError(f"no database entry for {t}") from None


def all_entries() -> list:
    return [lookup(t) for t in TYPES]


def standard_covering(m: int) -> CurveFunction:
    return CurveFunction.from_expr(STANDARD_COVERING[m], RATIONAL)


def standard_entry(m: int) -> DarbouxEntry:
    return lookup(STANDARD[m])


def evaluate_at_anchor(r: CurveFunction, anchor: Anchor):
    """Exact value of a rational curve function at an anchor point."""
    if isinstance(r, RadicalExpr):
        r = r.as_curve_function()
    return r.evaluate(anchor.x, anchor.xi)


def check_entry(entry: DarbouxEntry, order: int = 20):
    """Compare both sides of every evaluation by series; return list of (params, mismatch or None)."""
    out = []
    pad = order + 6
    phi = entry.covering.series(pad)
    for ev in entry.evaluations:
        lhs = series_2f1(ev.params, pad).compose(phi)
        rhs = puiseux_expand(ev.value, pad)
        if rhs.offset:
            out.append((ev.params, ("offset", rhs.offset, 0)))
            continue
        out.append((ev.params, lhs.truncate(order).first_mismatch(rhs.truncate(order))))
    return out


# --- export -----------------------------------------------------------------

def _render_cf(f: CurveFunction) -> dict:
    def terms(p):
        return [str(as_fraction(c)) for c in p.all_coeffs()[::-1]]
    return {"a": terms(f.a), "b": terms(f.b) if not f.b.is_zero else [], "c": terms(f.c)}


def _parse_cf(d: dict, curve: CurveSpec) -> CurveFunction:
    def poly(cs):
        return sp.Poly(sum(sp.Rational(c) * x**k for k, c in enumerate(cs)), x, domain=sp.QQ)
    return CurveFunction(poly(d["a"]), poly(d["b"]), poly(d["c"]), curve)


def _render_point(v) -> str:
    return render_quad(v) if isinstance(v, QuadExt) else str(v)


def export_records() -> list[dict]:
    recs = []
    for e in all_entries():
        for ev in e.evaluations:
            recs.append({
                "type": [str(v) for v in e.representative.as_tuple()],
                "curve": e.curve.name,
                "q": [str(c) for c in e.curve.q],
                "covering": _render_cf(e.covering),
                "params": [str(ev.params.a), str(ev.params.b), str(ev.params.c)],
                "factors": [{"base": _render_cf(b), "exponent": str(ex)} for b, ex in ev.value.factors],
                "rational": _render_cf(ev.value.rational),
                "anchor": [_render_point(e.anchor.x), _render_point(e.anchor.xi)],
            })
    return recs


def export_jsonl() -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in export_records())


def import_jsonl(text: str) -> list[tuple]:
    """Parse exported records back into (triple, curve, covering, params, RadicalExpr)."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        r = json.loads(line)
        curve = CURVES[r["curve"]]
        facs = tuple((_parse_cf(f["base"], curve), Fraction(f["exponent"])) for f in r["factors"])
        out.append((tuple(Fraction(v) for v in r["type"]), curve, _parse_cf(r["covering"], curve),
                    HGParams(*(Fraction(v) for v in r["params"])),
                    RadicalExpr(_parse_cf(r["rational"], curve), facs)))
    return out


def records_from_parsed(parsed) -> list[dict]:
    """Re-render parsed records (for round-trip checks)."""
    out = []
    for (tr, curve, cov, p, val), orig in zip(parsed, export_records()):
        out.append({**orig, "type": [str(v) for v in tr], "curve": curve.name,
                    "covering": _render_cf(cov), "params": [str(p.a), str(p.b), str(p.c)],
                    "factors": [{"base": _render_cf(b), "exponent": str(ex)} for b, ex in val.factors],
                    "rational": _render_cf(val.rational)})
    return out


__all__ = [
    "RadicalExpr", "radical_mul", "puiseux_expand", "Evaluation", "Anchor", "DarbouxEntry",
    "lookup", "all_entries", "standard_covering", "standard_entry", "evaluate_at_anchor",
    "check_entry", "export_jsonl", "import_jsonl", "export_records", "STANDARD_COVERING",
    "Z_ANCHORS",
]
