"""Exact truncated Laurent series in one variable.

A series stores ``coeffs[k]`` as the coefficient of ``t**(val + k)`` and is
known modulo ``t**(val + len(coeffs))``.  Coefficients are any exact field
elements (``Fraction`` or ``QuadExt``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import DomainError, rational_root


@dataclass(frozen=True)
class TruncSeries:
    coeffs: tuple
    val: int = 0
    # fractional leading power t**offset kept symbolic (e.g. Z**(1/m) prefactors)
    offset: Fraction = field(default=Fraction(0))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def prec(self) -> int:
        """Absolute precision: the series is exact below ``t**prec``."""
        return self.val + len(self.coeffs)

    @classmethod
    def from_list(cls, coeffs, val: int = 0) -> TruncSeries:
        return cls(tuple(coeffs), val).normalized()

    @classmethod
    def constant(cls, c, prec: int) -> TruncSeries:
        if prec <= 0:
            return cls((), prec)
        return cls.from_list([c] + [Fraction(0)] * (prec - 1))

    @classmethod
    def variable(cls, prec: int) -> TruncSeries:
        return cls.from_list([Fraction(0), Fraction(1)] + [Fraction(0)] * max(prec - 2, 0))

    def normalized(self) -> TruncSeries:
        cs = list(self.coeffs)
        v = self.val
        off = Fraction(self.offset)
        # fold integral parts of the symbolic offset into the valuation
        if off.denominator == 1:
            v += int(off)
            off = Fraction(0)
        while cs and cs[0] == 0:
            cs.pop(0)
            v += 1
        return TruncSeries(tuple(cs), v, off)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, k: int):
        i = k - self.val
        if i < 0:
            return Fraction(0)
        if i >= len(self.coeffs):
            raise IndexError(f"coefficient of t^{k} beyond precision {self.prec}")
        return self.coeffs[i]

    def truncate(self, prec: int) -> TruncSeries:
        n = max(prec - self.val, 0)
        return TruncSeries(self.coeffs[:n], self.val, self.offset)

    def dense(self, start: int, stop: int) -> list:
        return [self.coefficient(k) for k in range(start, stop)]

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            if self.prec <= 0 or other == 0:
                return self
            if self.offset:
                raise DomainError("adding a scalar to a series with a fractional offset")
            lo = min(self.val, 0)
            out = [self.coefficient(k) for k in range(lo, self.prec)]
            out[-lo] += other
            return TruncSeries(tuple(out), lo).normalized()
        if self.offset != other.offset:
            raise DomainError("adding series with different fractional offsets")
        lo = min(self.val, other.val)
        hi = min(self.prec, other.prec)
        out = [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi)]
        return TruncSeries(tuple(out), lo, self.offset).normalized()

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(tuple(-c for c in self.coeffs), self.val, self.offset)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TruncSeries:
        return TruncSeries(tuple(c * a for a in self.coeffs), self.val, self.offset).normalized()

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        a, b = self.normalized(), other.normalized()
        n = min(len(a.coeffs), len(b.coeffs))
        out = []
        for k in range(n):
            s = 0
            for i in range(k + 1):
                s += a.coeffs[i] * b.coeffs[k - i]
            out.append(s)
        return TruncSeries(tuple(out), a.val + b.val, a.offset + b.offset).normalized()

    __rmul__ = __mul__

    def inverse(self) -> TruncSeries:
        a = self.normalized()
        if not a.coeffs:
            raise ZeroDivisionError("inverse of a series with no known nonzero coefficient")
        c0 = a.coeffs[0]
        inv0 = 1 / c0 if not isinstance(c0, int) else Fraction(1, c0)
        out = [inv0]
        for k in range(1, len(a.coeffs)):
            s = 0
            for i in range(1, k + 1):
                s += a.coeffs[i] * out[k - i]
            out.append(-s * inv0)
        return TruncSeries(tuple(out), -a.val, -a.offset)

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(1 / Fraction(other) if isinstance(other, int) else 1 / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        """Integer or rational power.

        Rational powers need the leading term ``c*t**v`` to have ``v*e`` integral
        and ``c**e`` rational; the unit part uses the principal branch (value 1).
        """
        a = self.normalized()
        e = Fraction(e)
        if not a.coeffs:
            raise ZeroDivisionError("power of an unknown series")
        v = a.val * e
        c0 = a.coeffs[0]
        if e.denominator == 1:
            lead = c0 ** int(e) if int(e) >= 0 else (1 / c0) ** (-int(e))
        else:
            if not isinstance(c0, (int, Fraction)):
                raise DomainError("rational power of a non-rational leading coefficient")
            r = rational_root(Fraction(c0), e.denominator)
            if r is None:
                raise DomainError(f"leading coefficient {c0} has no rational {e.denominator}-th root")
            lead = r**e.numerator
        u = [c / c0 for c in a.coeffs]
        # J.C.P. Miller recurrence for g = u**e with u0 = 1
        g = [Fraction(1)]
        for k in range(1, len(u)):
            s = 0
            for j in range(1, k + 1):
                s += (e * j - (k - j)) * u[j] * g[k - j]
            g.append(s / k)
        fl = v.numerator // v.denominator
        return TruncSeries(tuple(lead * c for c in g), fl, a.offset * e + (v - fl)).normalized()

    def derivative(self) -> TruncSeries:
        if self.offset:
            raise DomainError("derivative of a series with a fractional offset")
        out = [(self.val + k) * c for k, c in enumerate(self.coeffs)]
        if self.val == 0 and out:
            out = out[1:]
            return TruncSeries(tuple(out), 0).normalized()
        return TruncSeries(tuple(out), self.val - 1).normalized()

    def integral(self) -> TruncSeries:
        """Antiderivative with zero constant term (needs no t^-1 term)."""
        out = []
        for k, c in enumerate(self.coeffs):
            n = self.val + k + 1
            if n == 0:
                if c != 0:
                    raise DomainError("integral of t^-1")
                out.append(Fraction(0))
            else:
                out.append(c / n)
        return TruncSeries(tuple(out), self.val + 1).normalized()

    def log(self) -> TruncSeries:
        """Logarithm of a series with constant term 1."""
        a = self.normalized()
        if a.val != 0 or a.offset or not a.coeffs or a.coeffs[0] != 1:
            raise DomainError("log needs a series with constant term 1")
        if len(a.coeffs) == 1:
            return TruncSeries((Fraction(0),), 0)
        d = (a.derivative() * a.inverse()).truncate(a.prec - 1)
        return d.integral().truncate(a.prec)

    def revert(self) -> TruncSeries:
        """Compositional inverse of a series ``c1*t + ...`` with c1 != 0."""
        a = self.normalized()
        if a.val != 1 or a.offset:
            raise DomainError("reversion needs a series of exact valuation 1")
        n = a.prec
        inv1 = 1 / a.coeffs[0]
        # Newton-free fixed point: g <- g - (f(g) - t)/f1, one new term per pass
        g = TruncSeries.variable(n).scale(inv1).truncate(n)
        for _ in range(n):
            r = a.compose(g).truncate(n) - TruncSeries.variable(n)
            if r.is_zero():
                break
            g = (g - r.scale(inv1)).truncate(n)
        return g

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """``self(inner(t))`` for an inner series of positive valuation."""
        g = inner.normalized()
        if g.val <= 0:
            raise DomainError("composition needs an inner series of positive valuation")
        f = self.normalized()
        cap = g.val * f.prec
        if not f.coeffs:
            return TruncSeries((), cap)
        acc = TruncSeries.constant(f.coeffs[-1], cap)
        for c in reversed(f.coeffs[:-1]):
            acc = (acc * g).truncate(cap) + c
        if f.val:
            acc = acc * g**f.val
        return acc.truncate(cap)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        lo = min(self.val, other.val)
        hi = min(self.prec, other.prec)
        if self.offset != other.offset:
            return False
        return all(self.coefficient(k) == other.coefficient(k) for k in range(lo, hi))

    def first_mismatch(self, other: TruncSeries):
        """Return (exponent, mine, theirs) for the first differing coefficient, or None."""
        lo = min(self.val, other.val)
        hi = min(self.prec, other.prec)
        for k in range(lo, hi):
            x, y = self.coefficient(k), other.coefficient(k)
            if x != y:
                return k, x, y
        return None

    def __str__(self):
        terms = [f"({c})*t^{self.val + k}" for k, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(terms + [f"O(t^{self.prec})"])
        return f"t^({self.offset})*[{body}]" if self.offset else body


def poly_on_series(coeffs_low_to_high, s: TruncSeries, prec: int) -> TruncSeries:
    """Evaluate a polynomial (coefficient list, constant first) at a series."""
    if not coeffs_low_to_high:
        return TruncSeries((), prec)
    acc = TruncSeries.constant(coeffs_low_to_high[-1], prec)
    for c in reversed(coeffs_low_to_high[:-1]):
        acc = (acc * s).truncate(prec) + c
    return acc.truncate(prec)
