"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values. A :class:`QuadScalar`
is ``rat + coef * sqrt(d)`` with ``d`` squarefree. Pure rationals are always
normalised to ``coef == 0, d == 1`` so that they mix freely with any field.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _RationalABC
from typing import Union

from .errors import InexactEvaluation, MixedRadicand, NotSquarefree

Rational = Fraction

ScalarLike = Union[int, Fraction, "QuadScalar"]


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _sign_of(u: Fraction, v: Fraction, d: int) -> int:
    """Sign of u + v*sqrt(d) for squarefree d > 1."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs; sqrt(d) irrational so the squares never tie
    return su if u * u > v * v * d else sv


@total_ordering
class QuadScalar:
    __slots__ = ("rat", "coef", "d")

    rat: Fraction
    coef: Fraction
    d: int

    def __init__(self, rat: int | Fraction = 0, coef: int | Fraction = 0, d: int = 1):
        rat = Fraction(rat)
        coef = Fraction(coef)
        d = int(d)
        if d < 0:
            raise NotSquarefree(f"radicand must be nonnegative, got {d}")
        if d == 0:
            coef = Fraction(0)
            d = 1
        elif d == 1:
            rat += coef
            coef = Fraction(0)
        elif not is_squarefree(d):
            raise NotSquarefree(f"radicand {d} is not squarefree")
        if coef == 0:
            d = 1
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, rat: Fraction, coef: Fraction, d: int) -> QuadScalar:
        # trusted constructor: d already squarefree
        obj = object.__new__(cls)
        if coef == 0:
            d = 1
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "coef", coef)
        object.__setattr__(obj, "d", d)
        return obj

    @classmethod
    def sqrt(cls, m: int) -> QuadScalar:
        """sqrt(m) for a squarefree positive m (m == 1 gives 1)."""
        if not is_squarefree(m):
            raise NotSquarefree(f"radicand {m} is not squarefree")
        return cls(0, 1, m)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.coef == 0

    def as_fraction(self) -> Fraction:
        if self.coef:
            raise InexactEvaluation(f"{self} is irrational")
        return self.rat

    def is_integer(self) -> bool:
        return self.coef == 0 and self.rat.denominator == 1

    def _common_d(self, other: QuadScalar) -> int:
        if self.d == other.d or other.d == 1:
            return self.d
        if self.d == 1:
            return other.d
        raise MixedRadicand(f"cannot combine sqrt({self.d}) and sqrt({other.d})")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        return QuadScalar._raw(self.rat + other.rat, self.coef + other.coef, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar._raw(-self.rat, -self.coef, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        return QuadScalar._raw(self.rat - other.rat, self.coef - other.coef, d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        a, b, c, e = self.rat, self.coef, other.rat, other.coef
        return QuadScalar._raw(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def inverse(self) -> QuadScalar:
        if self.coef == 0:
            if self.rat == 0:
                raise ZeroDivisionError("QuadScalar division by zero")
            return QuadScalar._raw(1 / self.rat, Fraction(0), 1)
        norm = self.rat * self.rat - self.coef * self.coef * self.d
        return QuadScalar._raw(self.rat / norm, -self.coef / norm, self.d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        self._common_d(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    # -- comparison --------------------------------------------------------

    def sign(self) -> int:
        if self.coef == 0:
            return (self.rat > 0) - (self.rat < 0)
        return _sign_of(self.rat, self.coef, self.d)

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            return self.rat == other.rat and self.coef == other.coef and self.d == other.d
        if isinstance(other, (int, _RationalABC)):
            return self.coef == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.coef == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef, self.d))

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __bool__(self):
        return bool(self.rat) or bool(self.coef)

    def __floor__(self) -> int:
        if self.coef == 0:
            return math.floor(self.rat)
        p, q = self.coef.numerator, self.coef.denominator
        root = math.isqrt(p * p * self.d)
        approx = Fraction(root if p > 0 else -root, q)
        n = math.floor(self.rat + approx)
        # the estimate is within one of the truth; settle it exactly
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def __float__(self) -> float:
        return float(self.rat) + float(self.coef) * math.sqrt(self.d)

    def __int__(self) -> int:
        if not self.is_integer():
            raise InexactEvaluation(f"{self} is not an integer")
        return self.rat.numerator

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        if self.coef == 0:
            return f"QuadScalar({self.rat!s})"
        return f"QuadScalar({self.rat!s}, {self.coef!s}, {self.d})"

    def __str__(self) -> str:
        if self.coef == 0:
            return str(self.rat)
        coef = {1: "", -1: "-"}.get(self.coef, str(self.coef))
        rad = f"{coef}√{self.d}"
        if self.rat == 0:
            return rad
        sign = "+" if self.coef > 0 else ""
        return f"{self.rat}{sign}{rad}"


def _coerce(x) -> QuadScalar:
    if isinstance(x, QuadScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadScalar._raw(Fraction(x), Fraction(0), 1)
    return NotImplemented


def qs(x: ScalarLike | str) -> QuadScalar:
    """Coerce ints, Fractions, fraction strings and QuadScalars."""
    if isinstance(x, QuadScalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return QuadScalar._raw(Fraction(x), Fraction(0), 1)
    if isinstance(x, str):
        from .serialize import parse_scalar

        return parse_scalar(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    raise TypeError(f"cannot convert {type(x).__name__} to QuadScalar")


def common_radicand(values) -> int:
    """The single radicand shared by ``values`` (1 when all are rational)."""
    d = 1
    for v in values:
        if v.d != 1:
            if d != 1 and v.d != d:
                raise MixedRadicand(f"values mix sqrt({d}) and sqrt({v.d})")
            d = v.d
    return d
