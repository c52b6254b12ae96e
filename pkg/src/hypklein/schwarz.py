"""Schwarz types of algebraic hypergeometric equations.

Two triples are of the same type when one is obtained from the other by a
permutation, sign changes and an integer shift whose total is even.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exactnum import DomainError, parse_rational
from .polyalg import RatFunc, s as S_VAR


@dataclass(frozen=True)
class ExponentTriple:
    e0: Fraction
    e1: Fraction
    einf: Fraction

    def __post_init__(self):
        for k in ("e0", "e1", "einf"):
            object.__setattr__(self, k, Fraction(getattr(self, k)))

    @classmethod
    def of(cls, e) -> ExponentTriple:
        if isinstance(e, ExponentTriple):
            return e
        if hasattr(e, "as_tuple"):
            e = e.as_tuple()
        a, b, c = e
        return cls(a, b, c)

    @classmethod
    def parse(cls, text: str) -> ExponentTriple:
        parts = text.split(",")
        if len(parts) != 3:
            raise DomainError(f"expected three comma-separated fractions, got {text!r}")
        vals = []
        offset = 0
        for p in parts:
            try:
                vals.append(parse_rational(p))
            except DomainError as exc:
                raise DomainError(f"{exc} (field starting at position {offset})") from None
            offset += len(p) + 1
        return cls(*vals)

    def as_tuple(self):
        return (self.e0, self.e1, self.einf)

    def positive(self) -> ExponentTriple:
        return ExponentTriple(abs(self.e0), abs(self.e1), abs(self.einf))

    def __str__(self):
        return f"({self.e0}, {self.e1}, {self.einf})"


class Group(Enum):
    TETRAHEDRAL = "tetrahedral"
    OCTAHEDRAL = "octahedral"
    ICOSAHEDRAL = "icosahedral"


class Rejection(Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    NOT_ALGEBRAIC = "not algebraic"


@dataclass(frozen=True)
class SchwarzType:
    group: Group
    representative: ExponentTriple
    m: int

    def __str__(self):
        return f"{self.group.value} {self.representative}"


def _t(a, b, c):
    return ExponentTriple(Fraction(a), Fraction(b), Fraction(c))


F = Fraction
TYPES: tuple[SchwarzType, ...] = tuple(
    [SchwarzType(Group.TETRAHEDRAL, _t(F(1, 2), F(1, 3), F(1, 3)), 3),
     SchwarzType(Group.TETRAHEDRAL, _t(F(1, 3), F(1, 3), F(2, 3)), 3),
     SchwarzType(Group.OCTAHEDRAL, _t(F(1, 2), F(1, 3), F(1, 4)), 4),
     SchwarzType(Group.OCTAHEDRAL, _t(F(2, 3), F(1, 4), F(1, 4)), 4)]
    + [SchwarzType(Group.ICOSAHEDRAL, _t(*r), 5) for r in [
        (F(1, 2), F(1, 3), F(1, 5)), (F(1, 2), F(1, 3), F(2, 5)), (F(1, 2), F(1, 5), F(2, 5)),
        (F(1, 3), F(1, 3), F(2, 5)), (F(1, 3), F(2, 3), F(1, 5)), (F(2, 3), F(1, 5), F(1, 5)),
        (F(1, 3), F(2, 5), F(3, 5)), (F(1, 3), F(1, 5), F(3, 5)), (F(1, 5), F(1, 5), F(4, 5)),
        (F(2, 5), F(2, 5), F(2, 5))]]
)

STANDARD = {3: TYPES[0], 4: TYPES[2], 5: TYPES[4]}


def type_by_representative(rep) -> SchwarzType:
    rep = ExponentTriple.of(rep)
    key = sorted(rep.positive().as_tuple())
    for t in TYPES:
        if sorted(t.representative.as_tuple()) == key:
            return t
    raise KeyError(f"no Schwarz type with representative {rep}")


def _equivalent(e, rep) -> bool:
    for perm in itertools.permutations(rep):
        for signs in itertools.product((1, -1), repeat=3):
            d = [ei - sg * r for ei, sg, r in zip(e, signs, perm)]
            if all(v.denominator == 1 for v in d) and sum(d) % 2 == 0:
                return True
    return False


def is_reducible(e) -> bool:
    for signs in itertools.product((1, -1), repeat=3):
        tot = sum(sg * v for sg, v in zip(signs, e))
        if tot.denominator == 1 and tot % 2 == 1:
            return True
    return False


def classify(e) -> SchwarzType | Rejection:
    """Schwarz type of a triple, or the reason it is out of scope."""
    e = ExponentTriple.of(e).as_tuple()
    if is_reducible(e) or any(v.denominator == 1 for v in e):
        return Rejection.CYCLIC
    if sum(1 for v in e if v.denominator == 2) >= 2:
        return Rejection.DIHEDRAL
    for t in TYPES:
        if _equivalent(e, t.representative.as_tuple()):
            return t
    return Rejection.NOT_ALGEBRAIC


def covering_degree(e, m: int) -> int:
    """d = 6m/(6-m) * (e0 + e1 + einf - 1) for the positive differences."""
    if m not in (3, 4, 5):
        raise DomainError(f"m = {m} is not 3, 4 or 5")
    tot = sum(ExponentTriple.of(e).positive().as_tuple())
    d = Fraction(6 * m, 6 - m) * (tot - 1)
    if d.denominator != 1 or d <= 0:
        raise DomainError(f"classification inconsistency: degree formula gives {d}")
    return int(d)


def standard_invariant(m: int, printed: bool = False) -> RatFunc:
    """The inverse standard Schwarz map S_m(s).

    With ``printed=True`` the cubic case uses the displayed denominator
    ``4(2s^3-1)``; the default squares it up to ``4(2s^3-1)^3``, the form that
    agrees with the standard Darboux covering (see tests).
    """
    v = S_VAR
    if m == 3:
        den = 4 * (2 * v**3 - 1) ** (1 if printed else 3)
        return RatFunc.from_expr(v**3 * (v**3 + 4) ** 3 / den, v)
    if m == 4:
        return RatFunc.from_expr(108 * v**4 * (v**4 - 1) ** 4 / (v**8 + 14 * v**4 + 1) ** 3, v)
    if m == 5:
        return RatFunc.from_expr(
            1728 * v**5 * (v**10 - 11 * v**5 - 1) ** 5
            / (v**20 + 228 * v**15 + 494 * v**10 - 228 * v**5 + 1) ** 3, v)
    raise DomainError(f"m = {m} is not 3, 4 or 5")


# Step 0: Z = 0 carries 1/m, Z = 1 carries 1/2, Z = oo carries 1/3.
def fiber_exponents(m: int) -> dict:
    return {"0": Fraction(1, m), "1": Fraction(1, 2), "inf": Fraction(1, 3)}


@dataclass(frozen=True)
class PointAssignment:
    """Exponent differences at X = 0, 1, oo with the Z-fibers each may lie in."""

    e0: Fraction
    e1: Fraction
    einf: Fraction
    fibers: tuple  # (fibers for X=0, fibers for X=1, fibers for X=oo)

    def triple(self) -> ExponentTriple:
        return ExponentTriple(self.e0, self.e1, self.einf)

    def __str__(self):
        names = ("X=0", "X=1", "X=oo")
        parts = []
        for n, v, f in zip(names, self.triple().as_tuple(), self.fibers):
            parts.append(f"{v} at {n} (above Z={'|'.join(f)})")
        return ", ".join(parts)


def _fibers_for(v: Fraction, m: int) -> tuple:
    out = []
    for name, ez in fiber_exponents(m).items():
        k = v / ez
        if k.denominator == 1 and k >= 1:
            out.append(name)
    return tuple(out)


def assign_points(e, t: SchwarzType) -> list[PointAssignment]:
    """All consistent assignments, most preferred first.

    Preference: a half-integer difference sits at X=1; otherwise two equal
    differences sit at X=0 and X=1; remaining ties go in increasing order.
    """
    vals = ExponentTriple.of(e).positive().as_tuple()
    seen = set()
    cands = []
    for perm in itertools.permutations(vals):
        if perm in seen:
            continue
        seen.add(perm)
        fibs = tuple(_fibers_for(v, t.m) for v in perm)
        if "0" not in fibs[0] or not fibs[1] or not fibs[2]:
            continue
        fibs = (("0",),) + fibs[1:]
        half_at_1 = perm[1].denominator == 2
        key = (not half_at_1, perm[0] != perm[1], perm[0], perm[1])
        cands.append((key, PointAssignment(perm[0], perm[1], perm[2], fibs)))
    if not cands:
        raise DomainError(f"classification inconsistency: no consistent point assignment for {vals}")
    cands.sort(key=lambda kc: kc[0])
    return [c for _, c in cands]


def standard_triple(m: int) -> ExponentTriple:
    """H0 with Z=0, 1, oo carrying 1/m, 1/2, 1/3."""
    f = fiber_exponents(m)
    return ExponentTriple(f["0"], f["1"], f["inf"])


__all__ = [
    "ExponentTriple", "Group", "Rejection", "SchwarzType", "TYPES", "STANDARD",
    "type_by_representative", "classify", "covering_degree", "standard_invariant",
    "PointAssignment", "assign_points", "standard_triple", "fiber_exponents", "is_reducible",
]
