"""Gauss 2F1 parameters, Euler's transformation, contiguous relations and exact series.

Contiguous functions are expressed in the basis ``(F, F')`` of a base function
``F = 2F1(a,b;c;X)``; second derivatives are removed with the hypergeometric
equation, so every shifted function is ``R0(X)*F + R1(X)*F'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import DomainError
from .polyalg import RatFunc, X
from .series import TruncSeries


def _is_nonpos_int(c: Fraction) -> bool:
    return c.denominator == 1 and c <= 0


@dataclass(frozen=True)
class HGParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for k in ("a", "b", "c"):
            object.__setattr__(self, k, Fraction(getattr(self, k)))
        if _is_nonpos_int(self.c):
            raise DomainError(f"c = {self.c} is a non-positive integer")

    def swapped(self) -> HGParams:
        return HGParams(self.b, self.a, self.c)

    def shifted(self, da: int, db: int, dc: int) -> HGParams:
        return HGParams(self.a + da, self.b + db, self.c + dc)

    def __str__(self):
        return f"({self.a}, {self.b}; {self.c})"


@dataclass(frozen=True)
class HGEquation:
    """H(e0, e1, einf): local exponent differences at X = 0, 1, oo."""

    e0: Fraction
    e1: Fraction
    einf: Fraction

    def __post_init__(self):
        for k in ("e0", "e1", "einf"):
            object.__setattr__(self, k, Fraction(getattr(self, k)))

    def as_tuple(self):
        return (self.e0, self.e1, self.einf)


def params_from_exponents(e) -> HGParams:
    """a = (1-e0-e1-einf)/2, b = (1-e0-e1+einf)/2, c = 1-e0 (so a <= b for einf >= 0)."""
    e0, e1, ei = (Fraction(v) for v in (e.as_tuple() if isinstance(e, HGEquation) else e))
    return HGParams((1 - e0 - e1 - ei) / 2, (1 - e0 - e1 + ei) / 2, 1 - e0)


def exponents_from_params(p: HGParams) -> HGEquation:
    return HGEquation(1 - p.c, p.c - p.a - p.b, p.b - p.a)


def euler_transform(p: HGParams) -> tuple[HGParams, Fraction]:
    """2F1(a,b;c;X) = (1-X)^(c-a-b) 2F1(c-a,c-b;c;X)."""
    return HGParams(p.c - p.a, p.c - p.b, p.c), p.c - p.a - p.b


def is_contiguous(p: HGParams, q: HGParams) -> bool:
    d = (p.a - q.a, p.b - q.b, p.c - q.c)
    return all(v.denominator == 1 for v in d)


# --- contiguous steps -------------------------------------------------------

def _rf(expr) -> RatFunc:
    return RatFunc.from_expr(expr, X)



def _step(p: HGParams, which: str):
    """Return (alpha, beta) with F(shifted) = alpha*F + beta*F' for F = 2F1(p).

    Returns None when the step divides by zero.
    """
    a, b, c = p.a, p.b, p.c
    Xe = X
    if which == "a+":
        return None if a == 0 else (_rf(1), _rf(Xe / _q(a)))
    if which == "b+":
        return None if b == 0 else (_rf(1), _rf(Xe / _q(b)))
    if which == "c-":
        if c == 1 or _is_nonpos_int(c - 1):
            return None
        return (_rf(1), _rf(Xe / _q(c - 1)))
    if which == "a-":
        if c == a:
            return None
        return (_rf((_q(c - a) - _q(b) * Xe) / _q(c - a)), _rf(Xe * (1 - Xe) / _q(c - a)))
    if which == "b-":
        if c == b:
            return None
        return (_rf((_q(c - b) - _q(a) * Xe) / _q(c - b)), _rf(Xe * (1 - Xe) / _q(c - b)))
    if which == "c+":
        if c == a or c == b:
            return None
        k = (c - a) * (c - b)
        return (_rf(_q(c * (c - a - b) / k)), _rf(_q(c / k) * (1 - Xe)))
    raise ValueError(which)


def _q(r):
    import sympy as sp

    r = Fraction(r)
    return sp.Rational(r.numerator, r.denominator)


_SHIFT = {"a+": (1, 0, 0), "a-": (-1, 0, 0), "b+": (0, 1, 0), "b-": (0, -1, 0),
          "c+": (0, 0, 1), "c-": (0, 0, -1)}


def _path(delta, order):
    steps = []
    names = {"a": 0, "b": 1, "c": 2}
    for v in order:
        k = delta[names[v]]
        steps += [v + ("+" if k > 0 else "-")] * abs(k)
    return steps


class ContiguityError(DomainError):
    pass


def contiguous_express(target: HGParams, base: HGParams) -> tuple[RatFunc, RatFunc]:
    """(R0, R1) with 2F1(target) = R0*F + R1*F', F = 2F1(base), all in X.

    The default path shifts c, then a, then b one unit at a time; other orders
    are tried when an intermediate step degenerates.
    """
    delta = (target.a - base.a, target.b - base.b, target.c - base.c)
    if any(d.denominator != 1 for d in delta):
        raise ContiguityError(f"{target} is not contiguous to {base}")
    delta = tuple(int(d) for d in delta)
    tried = []
    for order in itertools.permutations("cab"):
        order = "".join(order)
        steps = _path(delta, order)
        tried.append(order)
        res = _walk(base, steps)
        if res is not None:
            return res
    raise ContiguityError(
        f"every shift path from {base} to {target} degenerates (orders tried: {', '.join(tried)})")


def _walk(base: HGParams, steps):
    one = _rf(1)
    zero = _rf(0)
    # F_p = A F + B F',  F_p' = C F + D F'
    A, B, C, D = one, zero, zero, one
    p = base
    for st in steps:
        ab = _step(p, st)
        if ab is None:
            return None
        try:
            q = p.shifted(*_SHIFT[st])
        except DomainError:
            return None
        al, be = ab
        nA = al * A + be * C
        nB = al * B + be * D
        # derivative of al*F_p + be*F_p' using F_p'' from the equation of p
        xx = _rf(X * (1 - X))
        p2F = _rf(_q(p.a * p.b)) / xx                                # coefficient of F_p
        p2D = -_rf(_q(p.c) - _q(p.a + p.b + 1) * X) / xx            # coefficient of F_p'
        cF = al.diff(X) + be * p2F
        cD = al + be.diff(X) + be * p2D
        nC = cF * A + cD * C
        nD = cF * B + cD * D
        A, B, C, D = nA, nB, nC, nD
        p = q
    return A, B


def express_in_pair(target: HGParams, first: HGParams, second: HGParams):
    """(U, V) with 2F1(target) = U*2F1(first) + V*2F1(second) (all contiguous)."""
    r0, r1 = contiguous_express(target, first)
    s0, s1 = contiguous_express(second, first)
    if s1.is_zero():
        raise ContiguityError(f"{second} is a rational multiple of {first}")
    v = r1 / s1
    u = r0 - v * s0
    return u, v


# --- series -----------------------------------------------------------------

def series_2f1(p: HGParams, order: int) -> TruncSeries:
    if order < 1:
        raise DomainError("series order must be >= 1")
    out = [Fraction(1)]
    t = Fraction(1)
    for k in range(order - 1):
        t = t * (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1))
        out.append(t)
    return TruncSeries(tuple(out), 0)


def ratfunc_series(r: RatFunc, inner: TruncSeries, prec: int) -> TruncSeries:
    """Evaluate a univariate RatFunc at a series."""
    from .series import poly_on_series
    from .polyalg import as_fraction

    n = [as_fraction(c) for c in r.num.all_coeffs()[::-1]]
    d = [as_fraction(c) for c in r.den.all_coeffs()[::-1]]
    return (poly_on_series(n, inner, prec) * poly_on_series(d, inner, prec).inverse()).truncate(prec)


def check_contiguous_by_series(target: HGParams, base: HGParams, rel, order: int = 20):
    """Return None if R0*F + R1*F' matches 2F1(target) to ``order`` terms, else the mismatch."""
    r0, r1 = rel
    extra = 4
    n = order + extra
    f = series_2f1(base, n + 1)
    t = TruncSeries.variable(n)
    lhs = ratfunc_series(r0, t, n) * f.truncate(n) + ratfunc_series(r1, t, n) * f.derivative().truncate(n)
    rhs = series_2f1(target, n)
    return lhs.truncate(order).first_mismatch(rhs.truncate(order))


# --- invariants -------------------------------------------------------------

def schwarzian_data(eq) -> RatFunc:
    """2q - p' - p^2/2 for the equation H(e0, e1, einf) in the variable X."""
    e0, e1, ei = eq.as_tuple() if isinstance(eq, HGEquation) else (Fraction(v) for v in eq)
    pp = _rf((1 - _q(e0)) / X + (1 - _q(e1)) / (X - 1))
    qq = _rf((_q((1 - e0 - e1) ** 2 - ei**2)) / (4 * X * (X - 1)))
    return 2 * qq - pp.diff(X) - pp * pp * Fraction(1, 2)


def schwarzian_derivative(psi: RatFunc) -> RatFunc:
    """{psi, X} = psi'''/psi' - (3/2)(psi''/psi')^2."""
    d1 = psi.diff(X)
    d2 = d1.diff(X)
    d3 = d2.diff(X)
    r = d2 / d1
    return d3 / d1 - r * r * Fraction(3, 2)


__all__ = [
    "HGParams", "HGEquation", "params_from_exponents", "exponents_from_params",
    "euler_transform", "is_contiguous", "contiguous_express", "express_in_pair",
    "series_2f1", "ratfunc_series", "check_contiguous_by_series", "schwarzian_data",
    "schwarzian_derivative", "ContiguityError",
]
