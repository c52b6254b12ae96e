"""Rational and genus-1 Darboux curves and functions on them.

A function on the curve ``xi^2 = q(x)`` is stored as ``(a + b*xi)/c`` with
``a, b, c`` in Q[x]; on a rational curve ``b`` is always zero.  Series are
taken at the point ``x = 0`` with uniformizer ``t``: ``x = t`` on rational
curves, ``x = t^2`` and ``xi = t*sqrt(q(t^2)/t^2)`` (principal root) on genus-1
curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy as sp
from sympy import QQ, Poly

from .exactnum import DomainError
from .polyalg import as_fraction, horner, x, xi
from .series import TruncSeries, poly_on_series


@dataclass(frozen=True)
class CurveSpec:
    name: str
    q: tuple = ()  # coefficients of q(x), constant first; empty for the rational line

    @property
    def is_rational(self) -> bool:
        return not self.q

    @property
    def kind(self) -> str:
        return "Rational" if self.is_rational else "Genus1"

    @property
    def q_poly(self) -> Poly:
        return Poly(sum(sp.Rational(c.numerator, c.denominator) * x**k
                        for k, c in enumerate(self.q)), x, domain=QQ)

    def __str__(self):
        if self.is_rational:
            return "P1"
        return f"{self.name}: xi^2 = {sp.factor(self.q_poly.as_expr())}"


def _curve(name, expr):
    p = Poly(sp.expand(expr), x, domain=QQ)
    return CurveSpec(name, tuple(as_fraction(c) for c in p.all_coeffs()[::-1]))


RATIONAL = CurveSpec("P1")
E3 = _curve("E3", x * (1 + 33 * x - 9 * x**2))
E4 = _curve("E4", x * (1 + 5 * x - 5 * x**2))
E5 = _curve("E5", x * (1 + x) * (1 + 16 * x))
E6 = _curve("E6", x * (1 + x - x**2))
CURVES = {c.name: c for c in (RATIONAL, E3, E4, E5, E6)}


def _P(expr) -> Poly:
    return Poly(expr, x, domain=QQ)


def curve_reduce(p, curve: CurveSpec) -> tuple[Poly, Poly]:
    """Reduce a polynomial in (x, xi) modulo xi^2 - q(x): returns (a, b) with p = a + b*xi."""
    p = Poly(sp.sympify(p.as_expr() if isinstance(p, Poly) else p), xi, x, domain=QQ)
    a = _P(0)
    b = _P(0)
    if curve.is_rational:
        # the rational line has no xi; xi -> 0
        return _P(p.as_expr().subs(xi, 0)), b
    q = curve.q_poly
    qpow = {0: _P(1)}
    for (k, j), c in p.terms():
        h = k // 2
        if h not in qpow:
            qpow[h] = q**h
        term = qpow[h] * _P(x**j) * c
        if k % 2:
            b += term
        else:
            a += term
    return a, b


class CurveFunction:
    """``(a + b*xi)/c`` on a fixed curve; kept with gcd(a, b, c) = 1 and c monic."""

    __slots__ = ("a", "b", "c", "curve")

    def __init__(self, a: Poly, b: Poly, c: Poly, curve: CurveSpec, reduce: bool = True):
        if c.is_zero:
            raise DomainError("zero denominator on curve")
        if curve.is_rational:
            b = _P(0)
        if reduce:
            g = c.gcd(a).gcd(b) if not b.is_zero else c.gcd(a)
            if not g.is_one and not g.is_zero:
                a, b, c = a.exquo(g), (b.exquo(g) if not b.is_zero else b), c.exquo(g)
            lcc = c.LC()
            if lcc != 1:
                a, b, c = a.quo_ground(lcc), b.quo_ground(lcc), c.quo_ground(lcc)
        self.a, self.b, self.c, self.curve = a, b, c, curve

    # construction -----------------------------------------------------------
    @classmethod
    def from_expr(cls, expr, curve: CurveSpec) -> CurveFunction:
        expr = sp.together(sp.sympify(expr))
        n, d = sp.fraction(expr)
        na, nb = curve_reduce(n, curve)
        da, db = curve_reduce(d, curve)
        return cls(na, nb, _P(1), curve) / cls(da, db, _P(1), curve)

    @classmethod
    def const(cls, c, curve: CurveSpec) -> CurveFunction:
        c = Fraction(c)
        return cls(_P(sp.Rational(c.numerator, c.denominator)), _P(0), _P(1), curve)

    @classmethod
    def xvar(cls, curve: CurveSpec) -> CurveFunction:
        return cls(_P(x), _P(0), _P(1), curve)

    @classmethod
    def xivar(cls, curve: CurveSpec) -> CurveFunction:
        if curve.is_rational:
            raise DomainError("xi is not defined on the rational line")
        return cls(_P(0), _P(1), _P(1), curve)

    def as_expr(self):
        return (self.a.as_expr() + self.b.as_expr() * xi) / self.c.as_expr()

    # arithmetic -------------------------------------------------------------
    def _lift(self, other) -> CurveFunction:
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise DomainError("functions on different curves")
            return other
        if isinstance(other, (int, Fraction)):
            return CurveFunction.const(other, self.curve)
        return CurveFunction.from_expr(other, self.curve)

    def __add__(self, other):
        o = self._lift(other)
        if self.c == o.c:
            return CurveFunction(self.a + o.a, self.b + o.b, self.c, self.curve)
        return CurveFunction(self.a * o.c + o.a * self.c, self.b * o.c + o.b * self.c,
                             self.c * o.c, self.curve)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(-self.a, -self.b, self.c, self.curve, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        q = self.curve.q_poly if not self.curve.is_rational else _P(0)
        a = self.a * o.a + self.b * o.b * q
        b = self.a * o.b + self.b * o.a
        return CurveFunction(a, b, self.c * o.c, self.curve)

    __rmul__ = __mul__

    def conjugate(self) -> CurveFunction:
        return CurveFunction(self.a, -self.b, self.c, self.curve, reduce=False)

    def norm_poly(self) -> Poly:
        """a^2 - b^2 q (the norm of the numerator down to Q(x))."""
        if self.curve.is_rational:
            return self.a**2
        return self.a**2 - self.b**2 * self.curve.q_poly

    def inverse(self) -> CurveFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero curve function")
        if self.b.is_zero:
            return CurveFunction(self.c, _P(0), self.a, self.curve)
        n = self.norm_poly()
        return CurveFunction(self.c * self.a, -self.c * self.b, n, self.curve)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise DomainError("curve functions take integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        out = CurveFunction.const(1, self.curve)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return self.a.is_zero and self.b.is_zero

    def is_constant(self) -> bool:
        return self.b.is_zero and self.a.is_ground and self.c.is_ground

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except Exception:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash((self.a.as_expr(), self.b.as_expr(), self.c.as_expr(), self.curve))

    def degree_bound(self) -> int:
        return max(self.a.degree(), self.b.degree() + 1, self.c.degree(), 0)

    # maps -------------------------------------------------------------------
    def compose_aut(self, ax: CurveFunction, axi: CurveFunction | None) -> CurveFunction:
        """Pull back along an automorphism x -> ax, xi -> axi."""
        def ev(p: Poly):
            acc = CurveFunction.const(0, self.curve)
            for coef in p.all_coeffs():
                acc = acc * ax + CurveFunction.const(as_fraction(coef), self.curve)
            return acc
        num = ev(self.a)
        if not self.b.is_zero:
            if axi is None:
                raise DomainError("automorphism lacks its xi-action")
            num = num + ev(self.b) * axi
        return num / ev(self.c)

    def evaluate(self, x0, xi0=0):
        """Exact value at a curve point (Fraction or QuadExt coordinates)."""
        if not self.curve.is_rational:
            qv = horner(self.curve.q_poly, x0)
            if qv != xi0 * xi0:
                raise DomainError("evaluation point is not on the curve")
        cv = horner(self.c, x0)
        nv = horner(self.a, x0) + horner(self.b, x0) * xi0
        if cv == 0:
            # try the conjugate representative (a^2 - b^2 q) / (c (a - b xi))
            if not self.curve.is_rational:
                den2 = cv * (horner(self.a, x0) - horner(self.b, x0) * xi0)
                num2 = horner(self.norm_poly(), x0)
                if den2 != 0:
                    return num2 / den2
            raise DomainError("anchor unusable: pole of the function at the anchor")
        return nv / cv

    def series(self, prec: int) -> TruncSeries:
        xs, xis = uniformizer(self.curve, prec)
        pa = poly_on_series(_coeffs(self.a), xs, prec)
        pc = poly_on_series(_coeffs(self.c), xs, prec)
        num = pa
        if not self.b.is_zero:
            num = num + (poly_on_series(_coeffs(self.b), xs, prec) * xis).truncate(prec)
        return (num * pc.inverse()).truncate(prec)

    def numerator_poly(self):
        """Numerator as a sympy expression in (x, xi)."""
        return self.a.as_expr() + self.b.as_expr() * xi

    def __repr__(self):
        return f"CurveFunction({self.as_expr()}, {self.curve.name})"

    __str__ = lambda self: str(sp.factor(self.as_expr()))


def _coeffs(p: Poly):
    return [as_fraction(c) for c in p.all_coeffs()[::-1]]


@lru_cache(maxsize=64)
def uniformizer(curve: CurveSpec, prec: int):
    """Series of (x, xi) in the local parameter t at x = 0."""
    if curve.is_rational:
        return TruncSeries.variable(prec), TruncSeries((), prec)
    t2 = TruncSeries.from_list([Fraction(0), Fraction(0), Fraction(1)] + [Fraction(0)] * max(prec - 3, 0))
    t2 = t2.truncate(prec)
    q = list(curve.q)
    if q[0] != 0 or q[1] == 0:
        raise DomainError("curve must pass simply through x = 0")
    # q(x)/x evaluated at x = t^2, then xi = t * sqrt(.)
    qx = poly_on_series(q[1:], t2, prec)
    root = qx ** Fraction(1, 2)
    lead = q[1]
    if lead != 1:
        raise DomainError("the q'(0) = 1 normalization is assumed for the branch choice")
    xis = (TruncSeries.variable(prec) * root).truncate(prec)
    return t2, xis


def series_of_poly(expr, curve: CurveSpec, prec: int) -> TruncSeries:
    a, b = curve_reduce(expr, curve)
    return CurveFunction(a, b, _P(1), curve, reduce=False).series(prec)


__all__ = [
    "CurveSpec", "CurveFunction", "curve_reduce", "uniformizer", "series_of_poly",
    "RATIONAL", "E3", "E4", "E5", "E6", "CURVES",
]
