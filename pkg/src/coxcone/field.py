"""Exact scalars over Q and Q(sqrt 5).

A scalar is one of

* ``int`` or :class:`fractions.Fraction` -- the rational case, and
* :class:`Quad` -- ``(p + q*sqrt(5)) / s`` with integer ``p, q, s`` and
  ``q != 0``.

Arithmetic mixes freely: any operation whose irrational part cancels comes
back as a ``Fraction``, so a value equal to a rational is never a ``Quad``.
That keeps ``==`` and ``hash`` consistent across the two representations.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

__all__ = [
    "Quad",
    "Scalar",
    "PHI",
    "SQRT5",
    "sign",
    "simplify",
    "is_integer",
    "to_decimal",
    "format_scalar",
    "parse_scalar",
]


class Quad:
    """``(p + q*sqrt(5)) / s`` in lowest terms, ``s > 0`` and ``q != 0``."""

    __slots__ = ("p", "q", "s")

    def __init__(self, p: int, q: int, s: int = 1):
        if s == 0:
            raise ZeroDivisionError("Quad with zero denominator")
        if q == 0:
            raise ValueError("Quad needs a nonzero sqrt(5) part; use Fraction")
        if s < 0:
            p, q, s = -p, -q, -s
        g = gcd(gcd(p, q), s)
        self.p = p // g
        self.q = q // g
        self.s = s // g

    @staticmethod
    def make(p: int, q: int, s: int = 1) -> "Scalar":
        """Build ``(p + q r5)/s``, collapsing to a rational when ``q == 0``."""
        if q == 0:
            return simplify(Fraction(p, s))
        return Quad(p, q, s)

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.p, self.s)

    @property
    def sqrt5_part(self) -> Fraction:
        return Fraction(self.q, self.s)

    def conjugate(self) -> "Quad":
        return Quad(self.p, -self.q, self.s)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _as_triple(other)
        if o is None:
            return NotImplemented
        p2, q2, s2 = o
        return Quad.make(self.p * s2 + p2 * self.s, self.q * s2 + q2 * self.s,
                         self.s * s2)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.p, -self.q, self.s)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _as_triple(other)
        if o is None:
            return NotImplemented
        p2, q2, s2 = o
        return Quad.make(self.p * s2 - p2 * self.s, self.q * s2 - q2 * self.s,
                         self.s * s2)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_triple(other)
        if o is None:
            return NotImplemented
        p2, q2, s2 = o
        return Quad.make(self.p * p2 + 5 * self.q * q2,
                         self.p * q2 + self.q * p2, self.s * s2)

    __rmul__ = __mul__

    def inverse(self) -> "Quad":
        # 1/(p + q r5) = (p - q r5)/(p^2 - 5 q^2); the norm is never 0 since r5 is irrational
        norm = self.p * self.p - 5 * self.q * self.q
        return Quad(self.p * self.s, -self.q * self.s, norm)

    def __truediv__(self, other):
        o = _as_triple(other)
        if o is None:
            return NotImplemented
        p2, q2, s2 = o
        if p2 == 0 and q2 == 0:
            raise ZeroDivisionError("division by zero scalar")
        divisor = Quad.make(p2, q2, s2)
        if isinstance(divisor, Quad):
            return self * divisor.inverse()
        return self * (1 / Fraction(divisor))

    def __rtruediv__(self, other):
        return self.inverse() * other

    # comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.p == other.p and self.q == other.q and self.s == other.s
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(("Quad", self.p, self.q, self.s))

    def __bool__(self):
        return True

    def _cmp(self, other):
        if _as_triple(other) is None:
            return None
        return sign(self - other)

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __float__(self):
        return to_decimal(self)

    def __repr__(self):
        return f"Quad({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, Quad]

SQRT5 = Quad(0, 1)
PHI = Quad(1, 1, 2)


def _as_triple(x):
    if isinstance(x, Quad):
        return x.p, x.q, x.s
    if isinstance(x, int):
        return x, 0, 1
    if isinstance(x, Fraction):
        return x.numerator, 0, x.denominator
    return None


def simplify(x: Scalar) -> Scalar:
    """Collapse integral Fractions to int; leave everything else alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, bool):
        return int(x)
    return x


def sign(x: Scalar) -> int:
    """Exact sign of a scalar, decided without floating point."""
    if isinstance(x, Quad):
        p, q = x.p, x.q
        if p >= 0 and q > 0:
            return 1
        if p <= 0 and q < 0:
            return -1
        # opposite signs: the larger of p^2 and 5q^2 wins
        if p > 0:
            return 1 if p * p > 5 * q * q else -1
        return 1 if 5 * q * q > p * p else -1
    return (x > 0) - (x < 0)


def is_integer(x: Scalar) -> bool:
    if isinstance(x, Quad):
        return False
    if isinstance(x, Fraction):
        return x.denominator == 1
    return isinstance(x, int)


def to_decimal(x: Scalar) -> float:
    """Floating-point approximation, for display only."""
    if isinstance(x, Quad):
        # isqrt keeps ~30 digits without relying on float sqrt for large q
        scale = 10 ** 30
        r5 = isqrt(5 * scale * scale)
        return (x.p * scale + x.q * r5) / (x.s * scale)
    return float(x)


def format_scalar(x: Scalar) -> str:
    """Text form: ``p/q`` (``q`` dropped when 1) or ``(p+qr5)/s``."""
    if isinstance(x, Quad):
        op = "+" if x.q > 0 else "-"
        body = f"({x.p}{op}{abs(x.q)}r5)"
        return body if x.s == 1 else f"{body}/{x.s}"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_QUAD_RE = re.compile(
    r"^\s*\(\s*([+-]?\d+)\s*([+-])\s*([+-]?\d+)\s*r5\s*\)\s*(?:/\s*(\d+)\s*)?$")


def parse_scalar(text: str) -> Scalar:
    """Inverse of :func:`format_scalar`; tolerant of whitespace and signs."""
    if not isinstance(text, str):
        raise TypeError(f"scalar text must be a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m:
        den = int(m.group(2) or 1)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return simplify(Fraction(int(m.group(1)), den))
    m = _QUAD_RE.match(text)
    if m:
        q = int(m.group(3))
        if m.group(2) == "-":
            q = -q
        den = int(m.group(4) or 1)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Quad.make(int(m.group(1)), q, den)
    raise ValueError(f"not a scalar: {text!r}")
