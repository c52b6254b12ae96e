"""Exact scalars: rationals (``fractions.Fraction``) and real quadratic extensions Q(sqrt d)."""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

Rational = Fraction


class DomainError(ValueError):
    """Raised when an exact operation is applied outside its domain."""


def rational_normalize(n: int, d: int) -> Fraction:
    if d == 0:
        raise DomainError("zero denominator")
    return Fraction(n, d)


_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; no decimals, no floats."""
    m = _RAT_RE.match(text)
    if not m:
        # report the first offending character
        pos = 0
        allowed = set("+-/0123456789 ")
        for i, ch in enumerate(text):
            if ch not in allowed:
                pos = i
                break
        else:
            pos = len(text)
        raise DomainError(f"malformed fraction {text!r} at position {pos}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rational_normalize(num, den)


def render_rational(r: Fraction) -> str:
    return str(Fraction(r))


def _squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def rational_root(r: Fraction, n: int) -> Fraction | None:
    """Exact n-th root of a rational, or None when it is irrational."""
    r = Fraction(r)
    if r < 0:
        if n % 2 == 0:
            return None
        root = rational_root(-r, n)
        return None if root is None else -root

    def iroot(k: int) -> int | None:
        if k == 0:
            return 0
        lo, hi = 0, 1 << (k.bit_length() // n + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**n < k:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo**n == k else None

    a, b = iroot(r.numerator), iroot(r.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


class QuadExt:
    """Element ``a + b*sqrt(d)`` of Q(sqrt d) with square-free d > 1.

    Rationals mix freely; two elements with different ``d`` do not.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 5):
        if not _squarefree(d):
            raise DomainError(f"discriminant {d} is not square-free > 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainError(f"mismatched discriminants {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt d)")
        c = self.conjugate()
        return QuadExt(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadExt(1, 0, self.d), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadExt({self.a!s}, {self.b!s}, {self.d})"

    def __str__(self):
        return render_quad(self)


def render_quad(u: QuadExt | Fraction | int, spaced: bool = False) -> str:
    """Canonical text: ``p/q`` or ``p/q+r/s*sqrt(d)``."""
    if not isinstance(u, QuadExt) or u.b == 0:
        return render_rational(u.a if isinstance(u, QuadExt) else Fraction(u))
    sign = "-" if u.b < 0 else "+"
    if spaced:
        sign = f" {sign} "
    return f"{render_rational(u.a)}{sign}{render_rational(abs(u.b))}*sqrt({u.d})"


_QUAD_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)\s*(?:([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\((\d+)\))?\s*$"
)


def parse_quad(text: str) -> QuadExt | Fraction:
    m = _QUAD_RE.match(text)
    if not m:
        raise DomainError(f"malformed quadratic element {text!r}")
    a = parse_rational(m.group(1))
    if m.group(2) is None:
        return a
    b = parse_rational(m.group(3))
    if m.group(2) == "-":
        b = -b
    return QuadExt(a, b, int(m.group(4)))


def quad_mul(u: QuadExt, v: QuadExt) -> QuadExt:
    return u * v


def quad_conjugate(u: QuadExt) -> QuadExt:
    return u.conjugate()


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
