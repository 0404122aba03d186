"""Polynomials in z1, z2, z1bar, z2bar with exact Gaussian-rational coefficients.

The four generators are independent formal symbols (Wirtinger calculus); the
relation zbar = conj(z) is imposed only when a polynomial is evaluated.
"""
from __future__ import annotations

import enum
import json
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .scalar import GaussianRational

Monomial = tuple  # (a, b, c, d): z1^a z2^b z1bar^c z2bar^d


class VarId(enum.IntEnum):
    Z1 = 0
    Z2 = 1
    Z1BAR = 2
    Z2BAR = 3

    def conj(self) -> "VarId":
        return VarId((self + 2) % 4)

    @property
    def symbol(self) -> str:
        return VAR_NAMES[self]


VAR_NAMES = ("z1", "z2", "z1b", "z2b")
_UNIT = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
)


def monomial_key(mono: Monomial):
    """Sort key for graded lexicographic order (ascending)."""
    return (sum(mono),) + tuple(mono)


def _mono_str(mono: Monomial) -> str:
    parts = []
    for name, e in zip(VAR_NAMES, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    mono = tuple(int(e) for e in mono)
                    if len(mono) != 4 or min(mono) < 0:
                        raise ValueError(f"bad monomial exponents {mono}")
                    clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, v: VarId) -> "Polynomial":
        return cls._from_clean({_UNIT[v]: GaussianRational(1)})

    @classmethod
    def monomial(cls, exps: Monomial, c=1) -> "Polynomial":
        return cls({tuple(exps): c})

    # inspection -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded lex, descending) order."""
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def coeff(self, mono: Monomial) -> GaussianRational:
        return self._terms.get(tuple(mono), GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def max_exponents(self) -> tuple[int, int, int, int]:
        if not self._terms:
            return (0, 0, 0, 0)
        return tuple(max(m[k] for m in self._terms) for k in range(4))

    # ring operations ------------------------------------------------------
    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                p = c1 * c2
                s = out.get(mono)
                out[mono] = p if s is None else s + p
        return Polynomial._from_clean({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = GaussianRational.coerce(c)
        if not c:
            return Polynomial()
        return Polynomial._from_clean({m: v * c for m, v in self._terms.items()})

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus -------------------------------------------------------------
    def partial(self, v: VarId, order: int = 1) -> "Polynomial":
        return poly_partial(self, v, order)

    def conjugate(self) -> "Polynomial":
        return poly_conjugate(self)

    def __call__(self, z1, z2):
        return poly_eval(self, z1, z2)

    # text -----------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            ms = _mono_str(mono)
            parts.append(f"({c})*{ms}" if ms else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json_terms(self) -> list[dict]:
        return [
            {
                "exp": list(mono),
                "re": f"{c.re.numerator}/{c.re.denominator}",
                "im": f"{c.im.numerator}/{c.im.denominator}",
            }
            for mono, c in self.items()
        ]

    @classmethod
    def from_json_terms(cls, terms: Iterable[Mapping]) -> "Polynomial":
        out: dict = {}
        for t in terms:
            mono = tuple(int(e) for e in t["exp"])
            c = GaussianRational(Fraction(t["re"]), Fraction(t["im"]))
            out[mono] = out.get(mono, GaussianRational(0)) + c
        return cls(out)

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms())

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_terms(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Inverse of ``str``: ``"(2)*z1*z2b + (-1+1i)*z1b^2"``."""
        text = text.strip()
        if text == "0":
            return cls()
        out: dict = {}
        for chunk in _split_terms(text):
            chunk = chunk.strip()
            if not chunk.startswith("("):
                raise ValueError(f"term must start with a parenthesised coefficient: {chunk!r}")
            close = chunk.index(")")
            c = GaussianRational.parse(chunk[1:close])
            rest = chunk[close + 1:]
            exps = [0, 0, 0, 0]
            for factor in filter(None, rest.split("*")):
                name, _, power = factor.partition("^")
                try:
                    k = VAR_NAMES.index(name)
                except ValueError:
                    raise ValueError(f"unknown variable {name!r}") from None
                exps[k] += int(power) if power else 1
            mono = tuple(exps)
            out[mono] = out.get(mono, GaussianRational(0)) + c
        return cls(out)


def _split_terms(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _coerce_poly(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    try:
        return Polynomial.const(GaussianRational.coerce(x))
    except TypeError:
        return None


# named helpers used throughout
Z1 = Polynomial.var(VarId.Z1)
Z2 = Polynomial.var(VarId.Z2)
Z1B = Polynomial.var(VarId.Z1BAR)
Z2B = Polynomial.var(VarId.Z2BAR)
ONE = Polynomial.const(1)


def poly_arith(p: Polynomial, q: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {kind!r}")


def poly_partial(p: Polynomial, v: VarId, order: int = 1) -> Polynomial:
    """Formal partial derivative; ``order`` applications at once."""
    v = VarId(v)
    if order == 0:
        return p
    out = {}
    for mono, c in p._terms.items():
        e = mono[v]
        if e < order:
            continue
        factor = 1
        for k in range(order):
            factor *= e - k
        new = list(mono)
        new[v] = e - order
        out[tuple(new)] = c * factor
    return Polynomial._from_clean(out)


def poly_conjugate(p: Polynomial) -> Polynomial:
    return Polynomial._from_clean(
        {(m[2], m[3], m[0], m[1]): c.conjugate() for m, c in p._terms.items()}
    )


def poly_arrays(p: Polynomial) -> tuple[np.ndarray, np.ndarray]:
    """Exponent matrix (T x 4, int64) and complex coefficient vector of ``p``."""
    items = p.items()
    exps = np.array([m for m, _ in items], dtype=np.int64).reshape(len(items), 4)
    coeffs = np.array([complex(c) for _, c in items], dtype=np.complex128)
    return exps, coeffs


def poly_eval(p: Polynomial, z1, z2):
    """Numeric value with z1bar, z2bar bound to conj(z1), conj(z2).

    Scalars give a Python complex; arrays are evaluated elementwise.
    """
    from .kernels import poly_eval_batch

    scalar = np.ndim(z1) == 0 and np.ndim(z2) == 0
    a1, a2 = np.broadcast_arrays(np.asarray(z1, dtype=np.complex128), np.asarray(z2, dtype=np.complex128))
    shape = a1.shape
    exps, coeffs = poly_arrays(p)
    out = poly_eval_batch(exps, coeffs, a1.ravel(), a2.ravel()).reshape(shape)
    return complex(out) if scalar else out
