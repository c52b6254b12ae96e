"""Sparse multivariate polynomials and reduced rational functions over Q.

Polynomials are sympy ``Poly`` objects over ``QQ``; :class:`RatFunc` keeps a
reduced numerator/denominator pair with a monic (graded-lex) denominator.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import reduce

import sympy as sp
from sympy import QQ, Poly

from .exactnum import DomainError

X, Z, x, z, xi = sp.symbols("X Z x z xi")
alpha, beta, zeta, s = sp.symbols("alpha beta zeta s")

ORDER = "grlex"


def as_fraction(c) -> Fraction:
    c = QQ.convert(c) if not isinstance(c, (int, Fraction)) else c
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return Fraction(int(c.numerator), int(c.denominator))


def to_qq(c):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def poly(expr, *gens) -> Poly:
    return Poly(expr, *gens, domain=QQ)


def lc(p: Poly):
    """Leading coefficient in graded-lex order."""
    if p.is_zero:
        return QQ(0)
    return p.LC(order=ORDER)


def monic(p: Poly) -> Poly:
    if p.is_zero:
        return p
    return p.quo_ground(lc(p))


def poly_gcd(p: Poly, q: Poly, var=None) -> Poly:
    """Monic (graded-lex) gcd; ``gcd(0, 0) == 0``.

    ``var`` is accepted for interface symmetry; the gcd over Q[gens] is the same
    for every choice of main variable once normalized.
    """
    p, q = p.unify(q)
    if p.is_zero and q.is_zero:
        return p
    return monic(p.gcd(q))


def resultant(p: Poly, q: Poly, var) -> Poly:
    """Sylvester resultant with respect to ``var``; remaining gens are kept."""
    p, q = p.unify(q)
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise DomainError(f"resultant needs positive degree in {var}")
    others = [g for g in p.gens if g != var]
    r = sp.resultant(p.as_expr(), q.as_expr(), var)
    if not others:
        return Poly(r, *p.gens, domain=QQ)
    return Poly(r, *others, domain=QQ)


def primitive_part(p: Poly, var) -> Poly:
    """Divide out the content with respect to ``var`` (a polynomial in the other gens)."""
    others = [g for g in p.gens if g != var]
    if not others or p.is_zero:
        return monic(p)
    coeffs = Poly(p.as_expr(), var).all_coeffs()
    polys = [Poly(c, *others, domain=QQ) for c in coeffs if c != 0]
    content = reduce(lambda a, b: a.gcd(b), polys)
    cont = Poly(content.as_expr(), *p.gens, domain=QQ)
    return monic(p.exquo(cont))


def squarefree_part(p: Poly) -> Poly:
    factors = p.sqf_list()[1]
    out = Poly(1, *p.gens, domain=QQ)
    for f, _ in factors:
        out = out * f
    return monic(out)


class RatFunc:
    """Reduced rational function ``num/den`` with a graded-lex monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        if den is None:
            den = Poly(1, *num.gens, domain=QQ)
        num, den = num.unify(den)
        if den.is_zero:
            raise DomainError("zero denominator in rational function")
        if reduce:
            g = num.gcd(den)
            if not g.is_one:
                num = num.exquo(g)
                den = den.exquo(g)
            c = lc(den)
            if c != 1:
                num = num.quo_ground(c)
                den = den.quo_ground(c)
        self.num = num
        self.den = den

    @classmethod
    def from_expr(cls, expr, *gens) -> RatFunc:
        expr = sp.together(sp.sympify(expr))
        n, d = sp.fraction(expr)
        return cls(Poly(n, *gens, domain=QQ), Poly(d, *gens, domain=QQ))

    @classmethod
    def const(cls, c, *gens) -> RatFunc:
        return cls(Poly(sp.Rational(Fraction(c).numerator, Fraction(c).denominator), *gens, domain=QQ))

    @property
    def gens(self):
        return self.num.gens

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    def _lift(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, *self.gens)
        return RatFunc.from_expr(other, *self.gens)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n, reduce=False)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self._lift(other)
            except Exception:
                return NotImplemented
        a, b = self.num.unify(other.den)
        c, d = other.num.unify(self.den)
        return (a * b - c * d).is_zero

    def __hash__(self):
        return hash((self.num.as_expr(), self.den.as_expr()))

    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_constant(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def diff(self, var) -> RatFunc:
        return RatFunc(self.num.diff(var) * self.den - self.num * self.den.diff(var), self.den**2)

    def degree(self, var=None) -> int:
        """max(deg num, deg den) in ``var`` (the covering degree for univariate maps)."""
        var = var if var is not None else self.gens[0]
        return max(self.num.degree(var), self.den.degree(var))

    def evaluate(self, value):
        """Evaluate a univariate function at an exact scalar (Fraction or QuadExt)."""
        n = horner(self.num, value)
        d = horner(self.den, value)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return n / d

    def compose(self, inner: RatFunc) -> RatFunc:
        """Univariate composition ``self(inner)``."""
        deg = max(self.num.degree(), self.den.degree())
        n = homogeneous_eval(self.num, inner.num, inner.den, deg)
        d = homogeneous_eval(self.den, inner.num, inner.den, deg)
        return RatFunc(n, d)

    def __repr__(self):
        return f"RatFunc({self.as_expr()})"

    def __str__(self):
        return render_ratfunc(self)


def horner(p: Poly, value):
    acc = Fraction(0)
    for c in p.all_coeffs():
        acc = acc * value + as_fraction(c)
    return acc


def homogeneous_eval(p: Poly, n: Poly, d: Poly, deg: int) -> Poly:
    """``d**deg * p(n/d)`` for univariate ``p``."""
    coeffs = p.all_coeffs()[::-1]
    one = Poly(1, *n.gens, domain=QQ)
    n_pows = [one]
    for _ in range(deg):
        n_pows.append(n_pows[-1] * n)
    d_pows = [one]
    for _ in range(deg):
        d_pows.append(d_pows[-1] * d)
    out = Poly(0, *n.gens, domain=QQ)
    for i, c in enumerate(coeffs):
        if c:
            out += (n_pows[i] * d_pows[deg - i]).mul_ground(c)
    return out


def substitute(p, bindings: dict, gens=None) -> RatFunc:
    """Simultaneous substitution of symbols by rational functions, reduced."""
    expr = p.as_expr() if isinstance(p, (RatFunc, Poly)) else sp.sympify(p)
    vals = {}
    for k, v in bindings.items():
        vals[k] = v.as_expr() if isinstance(v, (RatFunc, Poly)) else sp.sympify(v)
    out = sp.cancel(sp.together(expr.subs(vals, simultaneous=True)))
    n, d = sp.fraction(out)
    if d == 0:
        raise DomainError("identically zero denominator after substitution")
    if gens is None:
        gens = sorted(out.free_symbols, key=str) or [X]
    return RatFunc(Poly(n, *gens, domain=QQ), Poly(d, *gens, domain=QQ))


def linear_factors(P: Poly, xvar=X, zvar=Z) -> list[tuple[RatFunc, int]]:
    """All factors ``D(X)*Z - N(X)`` of ``P`` found via squarefree decomposition,
    with their multiplicities."""
    P = Poly(P.as_expr(), xvar, zvar, domain=QQ)
    found = []
    for f, k in P.sqf_list()[1]:
        if f.degree(zvar) == 1:
            found.append((f, k))
    if not found:
        for f, k in P.factor_list()[1]:
            if f.degree(zvar) == 1:
                found.append((f, k))
    out = []
    for f, k in found:
        fz = Poly(f.as_expr(), zvar)
        a, b = fz.all_coeffs()
        out.append((RatFunc(Poly(-b, xvar, domain=QQ), Poly(a, xvar, domain=QQ)), k))
    return out


def extract_linear_factor(P: Poly, xvar=X, zvar=Z) -> RatFunc:
    if P.is_zero or Poly(P.as_expr(), zvar).degree() < 1:
        raise DomainError("need a nonzero polynomial of positive degree in Z")
    cands = linear_factors(P, xvar, zvar)
    if not cands:
        raise DomainError("elimination produced no Klein factor")
    cands.sort(key=lambda fk: (-fk[1], -fk[0].degree(xvar)))
    return cands[0][0]


INF = "inf"


def fiber_polynomial(psi: RatFunc, value) -> Poly:
    if value == INF or value is None:
        return psi.den
    v = Fraction(value)
    return psi.num - psi.den.mul_ground(to_qq(v))


def ramification_pattern(psi: RatFunc, value) -> list[int]:
    """Multiplicities of the points above ``value`` (``"inf"`` for infinity),
    including X = infinity; sorted descending."""
    if psi.is_constant():
        raise DomainError("ramification of a constant map")
    d = psi.degree()
    f = fiber_polynomial(psi, value)
    pattern = []
    for g, k in f.sqf_list()[1]:
        pattern.extend([k] * g.degree())
    at_inf = d - f.degree()
    if at_inf > 0:
        pattern.append(at_inf)
    return sorted(pattern, reverse=True)


def multiplicity_at(psi: RatFunc, value, point) -> int:
    """Order of ``psi - value`` (or of the pole when value is inf) at ``point``
    (a rational or ``"inf"``); zero when point is not in the fiber."""
    f = fiber_polynomial(psi, value)
    if point == INF:
        return psi.degree() - f.degree()
    k = 0
    lin = Poly(psi.gens[0] - to_qq(Fraction(point)), *psi.gens, domain=QQ)
    while not f.is_zero:
        q, r = f.div(lin)
        if not r.is_zero:
            break
        f = q
        k += 1
    return k


def _term_str(coeff: Fraction, monom, gens) -> str:
    parts = []
    for g, e in zip(gens, monom):
        if e == 1:
            parts.append(str(g))
        elif e > 1:
            parts.append(f"{g}^{e}")
    mono = "*".join(parts)
    c = abs(coeff)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    return f"{c}*{mono}"


def render_poly(p: Poly) -> str:
    """Descending graded-lex rendering with explicit ``*`` and ``^``."""
    if p.is_zero:
        return "0"
    out = []
    for monom, coeff in p.terms(order=ORDER):
        c = as_fraction(coeff)
        t = _term_str(c, monom, p.gens)
        if not out:
            out.append(("-" if c < 0 else "") + t)
        else:
            out.append((" - " if c < 0 else " + ") + t)
    return "".join(out)


def factored(p: Poly):
    """(rational constant, [(primitive integer factor with positive LC, multiplicity)])."""
    c, facs = p.factor_list()
    const = as_fraction(c)
    out = []
    for f, k in facs:
        f_c, f_prim = f.primitive() if f.domain.is_ZZ else f.clear_denoms(convert=True)[1].primitive()
        # f = f_prim * (scale); recover scale exactly
        scale = as_fraction(lc(f)) / as_fraction(lc(f_prim))
        if lc(f_prim) < 0:
            f_prim = -f_prim
            scale = -scale
        const *= scale**k
        out.append((Poly(f_prim.as_expr(), *p.gens, domain=QQ), k))
    out.sort(key=lambda fk: (len(fk[0].terms()) > 1, fk[0].total_degree(), render_poly(fk[0])))
    return const, out


def _factor_str(f: Poly, k: int) -> str:
    body = render_poly(f)
    single = len(f.terms()) == 1
    if single:
        return body if k == 1 else f"{body}^{k}"
    return f"({body})" if k == 1 else f"({body})^{k}"


def _product_str(const: Fraction, facs) -> tuple[str, bool]:
    """Render c * prod; returns (text, is_compound)."""
    parts = [_factor_str(f, k) for f, k in facs]
    neg = const < 0
    c = abs(const)
    if c != 1 or not parts:
        parts.insert(0, str(c))
    body = "*".join(parts)
    compound = len(parts) > 1
    return ("-" if neg else "") + body, compound


def render_ratfunc(r: RatFunc) -> str:
    """Factored, integer-cleared rendering, e.g. ``27*X / (4*X - 1)^3``."""
    cn, fn = factored(r.num)
    cd, fd = factored(r.den)
    c = cn / cd
    num_const = Fraction(c.numerator)
    den_const = Fraction(c.denominator)
    num_txt, _ = _product_str(num_const, fn)
    if not fd and den_const == 1:
        return num_txt
    den_txt, compound = _product_str(den_const, fd)
    if compound:
        den_txt = f"({den_txt})"
    return f"{num_txt} / {den_txt}"


def ratfunc_from_text(text: str, var=X) -> RatFunc:
    """Parse ``"<num>/<den>"`` style text with ``^`` powers (used by the CLI)."""
    expr = sp.sympify(text.replace("^", "**"), locals={str(var): var}, rational=True)
    return RatFunc.from_expr(expr, var)


def pattern_counter(pattern) -> Counter:
    return Counter(pattern)
