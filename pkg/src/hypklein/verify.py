"""Independent checks: database series identities, coverings, transformation identities."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .darboux import all_entries, check_entry
from .exactnum import DomainError
from .hyperg import ratfunc_series, schwarzian_data, schwarzian_derivative, series_2f1
from .polyalg import INF, RatFunc, X, multiplicity_at, ramification_pattern, render_ratfunc
from .schwarz import ExponentTriple, Rejection, classify, covering_degree, fiber_exponents, standard_triple
from .series import TruncSeries

PASS, FAIL = "pass", "fail"


@dataclass
class Check:
    name: str
    status: str
    witness: str = ""


@dataclass
class VerificationReport:
    subject: str
    checks: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return bool(self.checks) and all(c.status == PASS for c in self.checks)

    def add(self, name, ok, witness=""):
        self.checks.append(Check(name, PASS if ok else FAIL, "" if ok else str(witness)))

    def failures(self):
        return [c for c in self.checks if c.status != PASS]

    def to_dict(self) -> dict:
        return {"subject": self.subject, "overall": PASS if self.overall else FAIL,
                "checks": [{"subject": self.subject, "check": c.name, "status": c.status,
                            "witness": c.witness} for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.overall else 'FAIL'}"]
        for c in self.checks:
            w = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"  {c.status.upper():4} {c.name}{w}")
        return "\n".join(lines)


def check_database(order: int = 20) -> VerificationReport:
    if order < 1:
        raise DomainError("order must be positive")
    rep = VerificationReport(f"darboux database (order {order})")
    for entry in all_entries():
        for params, mism in check_entry(entry, order):
            name = f"{entry.representative} 2F1{params}"
            if mism is None:
                rep.add(name, True)
            else:
                k, mine, theirs = mism
                rep.add(name, False, f"t^{k}: lhs {mine}, rhs {theirs}")
    return rep


def _fiber_of(psi: RatFunc, point):
    for v in (0, 1, INF):
        k = multiplicity_at(psi, v, point)
        if k:
            return v, k
    return None, 0


def induced_exponents(psi: RatFunc, m: int) -> tuple:
    """Exponent differences psi induces at X = 0, 1, oo (multiplicity times the fiber exponent)."""
    fe = fiber_exponents(m)
    key = {0: "0", 1: "1", INF: "inf"}
    out = []
    for p in (0, 1, INF):
        v, k = _fiber_of(psi, p)
        out.append(Fraction(1) if v is None else k * fe[key[v]])
    return tuple(out)


def check_covering(e, psi: RatFunc, subject: str | None = None) -> VerificationReport:
    e = ExponentTriple.of(e)
    rep = VerificationReport(subject or f"covering for {e}: Z = {render_ratfunc(psi)}")
    t = classify(e)
    if isinstance(t, Rejection):
        rep.add("classification", False, t.value)
        return rep
    if psi.is_constant():
        rep.add("degree", False, "constant map")
        return rep
    m = t.m
    d = covering_degree(e, m)
    rep.add("degree", psi.degree() == d, f"degree {psi.degree()} != {d}")
    fe = fiber_exponents(m)
    # points over 0, 1, oo away from X = 0, 1, oo must be non-singular
    bad = []
    for key, v in (("0", 0), ("1", 1), ("inf", INF)):
        pat = ramification_pattern(psi, v)
        special = [multiplicity_at(psi, v, p) for p in (0, 1, INF)]
        rest = list(pat)
        for k in special:
            if k:
                rest.remove(k)
        for k in rest:
            if k * fe[key] != 1:
                bad.append(f"multiplicity {k} over Z={key}")
    induced = induced_exponents(psi, m)
    ok_ends = sorted(induced) == sorted(e.positive().as_tuple())
    rep.add("ramification", not bad and ok_ends,
            "; ".join(bad + ([] if ok_ends else [f"induced {tuple(map(str, induced))} vs {e}"])))
    if ok_ends:
        I1 = schwarzian_data(induced)
        I0 = schwarzian_data(standard_triple(m).as_tuple())
        d1 = psi.diff(X)
        resid = I1 - (I0.compose(psi) * d1 * d1 + schwarzian_derivative(psi))
        rep.add("schwarzian", resid.is_zero(), f"residual {resid.as_expr()}" if not resid.is_zero() else "")
    else:
        rep.add("schwarzian", False, "skipped: exponent triple not induced")
    return rep


def identity_series(ident, order: int):
    """(lhs, rhs) series of a TransformationIdentity to ``order`` terms."""
    n = order + 2
    t = TruncSeries.variable(n)
    psis = ratfunc_series(ident.psi, t, n)
    rhs = (ident.theta_series(n) * series_2f1(ident.rhs_params, n).compose(psis)).truncate(order)
    lhs = series_2f1(ident.lhs_params, order)
    return lhs, rhs


def check_identity(ident, order: int = 20) -> VerificationReport:
    rep = VerificationReport(f"identity 2F1{ident.lhs_params} = theta * 2F1{ident.rhs_params}(psi)")
    lhs, rhs = identity_series(ident, order)
    mm = lhs.first_mismatch(rhs)
    rep.add(f"series to order {order}", mm is None,
            "" if mm is None else f"X^{mm[0]}: lhs {mm[1]}, rhs {mm[2]}")
    return rep


__all__ = ["Check", "VerificationReport", "check_database", "check_covering", "check_identity",
           "induced_exponents", "identity_series", "PASS", "FAIL"]
