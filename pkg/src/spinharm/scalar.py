"""Exact scalars: Gaussian rationals a+bi over Q and single radicals q*sqrt(s).

Rationals are :class:`fractions.Fraction` (arbitrary precision, always reduced,
positive denominator).
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

import mpmath

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "RadicalScalar",
    "gr_arith",
    "rad_mul",
    "rad_to_float",
    "parse_rational",
    "format_rational",
    "squarefree_split",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    return str(x)


class GaussianRational:
    """Element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; pass re, im as rationals")
        if isinstance(x, str):
            return cls.parse(x)
        return cls(x, 0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / (self ** -n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # text -----------------------------------------------------------------
    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    def __repr__(self):
        return f"GaussianRational({self})"

    _TERM = re.compile(r"([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*(i?)")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"3/2+1/2i"``, ``"-i"``, ``"2"``, ``"1/3-4i"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational")
        re_part = Fraction(0)
        im_part = Fraction(0)
        pos = 0
        seen = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"malformed Gaussian rational: {text!r}")
            sign, mag, unit = m.groups()
            if not mag and not unit:
                raise ValueError(f"malformed Gaussian rational: {text!r}")
            value = Fraction(mag) if mag else Fraction(1)
            if sign == "-":
                value = -value
            if unit:
                im_part += value
            else:
                re_part += value
            pos = m.end()
            seen += 1
            if seen > 2:
                raise ValueError(f"malformed Gaussian rational: {text!r}")
        return cls(re_part, im_part)


I = GaussianRational(0, 1)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def gr_arith(a: GaussianRational, b: GaussianRational, kind: str) -> GaussianRational:
    """Field operation in Q(i); ``kind`` is one of add, sub, mul, div.

    Raises ZeroDivisionError for ``div`` by zero.
    """
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


# radicals -------------------------------------------------------------------

def squarefree_split(n: int) -> tuple[int, int]:
    """Return (k, f) with n = k**2 * f and f squarefree, for n >= 0."""
    if n < 0:
        raise ValueError("squarefree_split needs n >= 0")
    if n == 0:
        return 0, 1
    k = 1
    f = 1
    rest = n
    p = 2
    # trial division up to the cube root; the cofactor then has at most two
    # prime factors, so it is squarefree unless it is a perfect square
    while p * p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(rest)
    if r * r == rest and rest > 1:
        k *= r
    else:
        f *= rest
    return k, f


class RadicalScalar:
    """Exact value q*sqrt(s) with q rational and s >= 0 rational.

    Canonical form: s has squarefree numerator and denominator; zero is (0, 1).
    """

    __slots__ = ("q", "s")

    def __init__(self, q=1, s=1):
        q = _as_fraction(q)
        s = _as_fraction(s)
        if s < 0:
            raise ValueError("radicand must be non-negative")
        if q == 0 or s == 0:
            self.q, self.s = Fraction(0), Fraction(1)
            return
        kn, fn = squarefree_split(s.numerator)
        kd, fd = squarefree_split(s.denominator)
        self.q = q * Fraction(kn, kd)
        self.s = Fraction(fn, fd)

    @classmethod
    def _raw(cls, q: Fraction, s: Fraction) -> "RadicalScalar":
        obj = cls.__new__(cls)
        obj.q, obj.s = q, s
        return obj

    def canonical(self) -> "RadicalScalar":
        return RadicalScalar(self.q, self.s)

    def __mul__(self, other):
        if not isinstance(other, RadicalScalar):
            try:
                other = RadicalScalar(_as_fraction(other), 1)
            except TypeError:
                return NotImplemented
        return rad_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RadicalScalar):
            try:
                other = RadicalScalar(_as_fraction(other), 1)
            except TypeError:
                return NotImplemented
        return rad_mul(self, other.inverse())

    def inverse(self) -> "RadicalScalar":
        if self.q == 0:
            raise ZeroDivisionError("inverse of zero radical")
        # 1/(q sqrt(s)) = (1/(q s)) sqrt(s)
        return RadicalScalar._raw(1 / (self.q * self.s), self.s)

    def __neg__(self):
        return RadicalScalar._raw(-self.q, self.s)

    def square(self) -> Fraction:
        return self.q * self.q * self.s

    def is_zero(self) -> bool:
        return self.q == 0

    def is_rational(self) -> bool:
        return self.s == 1 or self.q == 0

    def __eq__(self, other):
        if isinstance(other, RadicalScalar):
            return self.q == other.q and self.s == other.s
        try:
            o = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.s == 1 and self.q == o

    def __hash__(self):
        if self.s == 1:
            return hash(self.q)
        return hash((self.q, self.s))

    def __float__(self):
        return float(rad_to_float(self, 64))

    def __str__(self):
        if self.q == 0:
            return "0"
        if self.s == 1:
            return str(self.q)
        if self.q == 1:
            return f"sqrt({self.s})"
        if self.q == -1:
            return f"-sqrt({self.s})"
        return f"{self.q}*sqrt({self.s})"

    def __repr__(self):
        return f"RadicalScalar({self})"

    _PAT = re.compile(
        r"^\s*(?:(?P<q>[+-]?[0-9]+(?:/[0-9]+)?)\s*\*\s*)?(?P<neg>-)?\s*sqrt\(\s*(?P<s>[0-9]+(?:/[0-9]+)?)\s*\)\s*$"
    )

    @classmethod
    def parse(cls, text: str) -> "RadicalScalar":
        """Parse ``"1/2*sqrt(3)"``, ``"sqrt(2)"``, ``"-sqrt(1/2)"`` or a plain rational."""
        m = cls._PAT.match(text)
        if m is None:
            return cls(parse_rational(text), 1)
        q = Fraction(m.group("q")) if m.group("q") else Fraction(1)
        if m.group("neg"):
            if m.group("q"):
                raise ValueError(f"malformed radical: {text!r}")
            q = -q
        return cls(q, Fraction(m.group("s")))


def rad_mul(a: RadicalScalar, b: RadicalScalar) -> RadicalScalar:
    """Exact product in canonical form.

    Both factors are canonical, so with g = gcd of the radicands the product
    s1*s2 = g**2 * (s1/g)(s2/g) and the cofactor is already squarefree.
    """
    if a.q == 0 or b.q == 0:
        return RadicalScalar._raw(Fraction(0), Fraction(1))
    gn = math.gcd(a.s.numerator, b.s.numerator)
    gd = math.gcd(a.s.denominator, b.s.denominator)
    sn = (a.s.numerator // gn) * (b.s.numerator // gn)
    sd = (a.s.denominator // gd) * (b.s.denominator // gd)
    return RadicalScalar._raw(a.q * b.q * Fraction(gn, gd), Fraction(sn, sd))


def rad_to_float(a: RadicalScalar, precision: int = 53):
    """q*sqrt(s) as an mpmath float carrying ``precision`` bits (plus guard bits)."""
    if a.q == 0:
        return mpmath.mpf(0)
    with mpmath.workprec(precision + 16):
        q = mpmath.mpf(a.q.numerator) / a.q.denominator
        s = mpmath.mpf(a.s.numerator) / a.s.denominator
        value = q * mpmath.sqrt(s)
    return value
