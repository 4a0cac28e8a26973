"""Exact scalars: rationals (``fractions.Fraction``) and the quadratic field Q(sqrt 2).

Every exact routine in :mod:`gptlab.geometry` is written against the ordinary
arithmetic operators, so it runs unchanged on ``Fraction`` or on :class:`QSqrt2`.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union


class QSqrt2:
    """A number ``a + b*sqrt(2)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QSqrt2):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt2(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        norm = o.a * o.a - 2 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        conj = QSqrt2(o.a / norm, -o.b / norm)
        return self * conj

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 2 b^2
        d = self.a * self.a - 2 * self.b * self.b
        return sa if d > 0 else (-sa if d < 0 else 0)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def _cmp(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, float):
            return float(self) == other
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(2.0)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"QSqrt2({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(self)


SQRT2 = QSqrt2(0, 1)

Scalar = Union[Fraction, QSqrt2]


def simplify(x):
    """Collapse a ``QSqrt2`` with zero irrational part to a ``Fraction``."""
    if isinstance(x, QSqrt2) and x.b == 0:
        return x.a
    if isinstance(x, int):
        return Fraction(x)
    return x


def format_scalar(x) -> str:
    """Serialize as ``"p/q"``, ``"p"`` or ``"p/q+r/s*sqrt2"``."""
    if isinstance(x, QSqrt2):
        if x.b == 0:
            return format_scalar(x.a)
        irr = f"{_frac_str(x.b)}*sqrt2"
        if x.a == 0:
            return irr
        sep = "" if x.b < 0 else "+"
        return f"{_frac_str(x.a)}{sep}{irr}"
    return _frac_str(Fraction(x))


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_scalar(value) -> Scalar:
    """Inverse of :func:`format_scalar`; ints and fractions pass through.

    Floats are rejected: the exact engine must never see a rounded input.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, QSqrt2):
        return simplify(value)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} given where an exact rational is required")
    s = str(value).strip()
    if "sqrt" not in s:
        return Fraction(s)
    head = re.sub(r"\*?\s*sqrt\(?2\)?\s*$", "", s).replace(" ", "")
    if head == s.replace(" ", ""):
        raise ValueError(f"cannot parse {value!r} as an element of Q(sqrt2)")
    split = max(head.rfind("+"), head.rfind("-"))
    if split > 0:
        a, coef_s = Fraction(head[:split]), head[split:]
    else:
        a, coef_s = Fraction(0), head
    if coef_s in ("", "+"):
        coef = Fraction(1)
    elif coef_s == "-":
        coef = Fraction(-1)
    else:
        coef = Fraction(coef_s)
    return simplify(QSqrt2(a, coef))


def to_float(x) -> float:
    return float(x)
