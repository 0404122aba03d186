"""|j,m> multiplets as exact harmonic polynomials on C^2.

Kets are stored unnormalized: ``body`` is the polynomial produced by the
ladder, and ``norm_factor`` is the exact product of the ladder coefficients
picked up on the way, so the normalized state is ``body / norm_factor``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator

from .poly import ONE, Z1, Z1B, Z2, Z2B, Polynomial, poly_eval
from .scalar import GaussianRational, RadicalScalar
from .weyl import GeneratorTag, generator, weyl_apply


# half-integers ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class HalfInt:
    """A value in (1/2)Z stored as twice its value."""

    twice: int

    @classmethod
    def parse(cls, value) -> "HalfInt":
        """Accept ``HalfInt``, int, Fraction, float or text like "3/2", "1.5", "-1/2"."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            text = value.strip()
            if not text:
                raise ValueError("empty half-integer")
            try:
                frac = Fraction(text)
            except ValueError:
                raise ValueError(f"not a half-integer: {value!r}") from None
        elif isinstance(value, float):
            frac = Fraction(value)
        else:
            frac = Fraction(value)
        doubled = 2 * frac
        if doubled.denominator != 1:
            raise ValueError(f"not a half-integer: {value!r}")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_half(self) -> bool:
        return self.twice % 2 == 1

    def __float__(self):
        return self.twice / 2

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.parse(other).twice)

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.parse(other).twice)

    def __neg__(self):
        return HalfInt(-self.twice)


def _check_j(j) -> HalfInt:
    j = HalfInt.parse(j)
    if j.twice < 0:
        raise ValueError(f"total angular momentum must be >= 0, got {j}")
    return j


def m_values(j) -> list[HalfInt]:
    """m = +j, j-1, ..., -j."""
    j = _check_j(j)
    return [HalfInt(t) for t in range(j.twice, -j.twice - 1, -2)]


# kets -----------------------------------------------------------------------

@dataclass(frozen=True)
class Ket:
    j: HalfInt
    m: HalfInt
    body: Polynomial
    norm_factor: RadicalScalar = field(default_factory=lambda: RadicalScalar(1, 1))

    def normalized(self) -> tuple[RadicalScalar, Polynomial]:
        """(c, body) with the normalized state equal to c * body exactly."""
        return self.norm_factor.inverse(), self.body

    def evaluate(self, z1, z2, normalized: bool = True):
        value = poly_eval(self.body, z1, z2)
        if normalized:
            value = value / float(self.norm_factor)
        return value

    def label(self) -> str:
        return f"|{self.j},{self.m}>"


@dataclass(frozen=True)
class Annihilated:
    """Result of raising the top (or lowering the bottom) member of a multiplet."""

    source: Ket
    direction: str
    body: Polynomial = field(default_factory=Polynomial)


def _hw_body(j: HalfInt) -> Polynomial:
    if j.twice % 2 == 0:
        return (Z1 * Z2B) ** (j.twice // 2)
    return Z1 * (Z1 * Z2B) ** ((j.twice - 1) // 2)


def _lw_body(j: HalfInt) -> Polynomial:
    if j.twice % 2 == 0:
        return (Z1B * Z2) ** (j.twice // 2)
    return Z2 * (Z1B * Z2) ** ((j.twice - 1) // 2)


def _assert_ket(k: Ket) -> None:
    rep = verify_ket(k)
    if not rep.passed:
        raise AssertionError(f"{k.label()} fails its invariants: {rep.failed()}")


def highest_weight(j) -> Ket:
    """|j,+j> = (z1 z2bar)^n for j = n, z1 (z1 z2bar)^n for j = n + 1/2."""
    j = _check_j(j)
    k = Ket(j, j, _hw_body(j))
    _assert_ket(k)
    if weyl_apply(generator(GeneratorTag.Lplus), k.body):
        raise AssertionError("highest weight vector is not annihilated by L+")
    return k


def lowest_weight(j) -> Ket:
    """|j,-j> = (z1bar z2)^n for j = n, z2 (z1bar z2)^n for j = n + 1/2."""
    j = _check_j(j)
    k = Ket(j, -j, _lw_body(j))
    _assert_ket(k)
    if weyl_apply(generator(GeneratorTag.Lminus), k.body):
        raise AssertionError("lowest weight vector is not annihilated by L-")
    return k


def ladder_coefficient(j, m, direction: str) -> RadicalScalar:
    """sqrt((j - m)(j + m + 1)) for raise, sqrt((j + m)(j - m + 1)) for lower."""
    jv = HalfInt.parse(j).value
    mv = HalfInt.parse(m).value
    if direction == "raise":
        return RadicalScalar(1, (jv - mv) * (jv + mv + 1))
    if direction == "lower":
        return RadicalScalar(1, (jv + mv) * (jv - mv + 1))
    raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")


def ladder(k: Ket, direction: str) -> Ket | Annihilated:
    """Apply L+ or L- and accumulate the matching ladder coefficient."""
    if direction == "raise":
        op, step = generator(GeneratorTag.Lplus), 2
    elif direction == "lower":
        op, step = generator(GeneratorTag.Lminus), -2
    else:
        raise ValueError(f"direction must be 'raise' or 'lower', got {direction!r}")
    body = weyl_apply(op, k.body)
    coeff = ladder_coefficient(k.j, k.m, direction)
    if coeff.is_zero():
        if body:
            raise AssertionError(f"{direction} of {k.label()} should vanish but gave {body}")
        return Annihilated(k, direction)
    return Ket(k.j, HalfInt(k.m.twice + step), body, k.norm_factor * coeff)


@dataclass(frozen=True)
class Multiplet:
    j: HalfInt
    direction: str
    kets: tuple  # ordered by m from +j down to -j

    def __iter__(self) -> Iterator[Ket]:
        return iter(self.kets)

    def __len__(self):
        return len(self.kets)

    def ket(self, m) -> Ket:
        m = HalfInt.parse(m)
        for k in self.kets:
            if k.m == m:
                return k
        raise KeyError(str(m))


def multiplet(j, direction: str = "from_top") -> Multiplet:
    """All 2j+1 kets, by descending from |j,j> or ascending from |j,-j>."""
    j = _check_j(j)
    if direction == "from_top":
        k, move = highest_weight(j), "lower"
    elif direction == "from_bottom":
        k, move = lowest_weight(j), "raise"
    else:
        raise ValueError(f"direction must be 'from_top' or 'from_bottom', got {direction!r}")
    kets = [k]
    for _ in range(j.twice):
        k = ladder(k, move)
        _assert_ket(k)
        kets.append(k)
    end = ladder(k, move)
    if not isinstance(end, Annihilated):
        raise AssertionError("multiplet did not terminate")
    if direction == "from_bottom":
        kets.reverse()
    return Multiplet(j, direction, tuple(kets))


def half_step(k: Ket, which) -> Polynomial:
    """Apply one of the eight j-operators to the ket body."""
    tag = GeneratorTag.parse(which) if isinstance(which, str) else GeneratorTag(which)
    if tag.parity != 1:
        raise ValueError(f"{tag.value} is not one of the j-operators")
    return weyl_apply(generator(tag), k.body)


def weights(p: Polynomial) -> tuple[HalfInt, HalfInt] | None:
    """(j, m) if p is a joint L, Lz eigenvector, else None."""
    if not p:
        return None
    out = []
    for tag in (GeneratorTag.L, GeneratorTag.Lz):
        image = weyl_apply(generator(tag), p)
        mono, c = p.items()[0]
        lam = image.coeff(mono) / c
        if lam.im != 0 or image != p.scale(lam):
            return None
        out.append(HalfInt.parse(lam.re))
    return out[0], out[1]


def proportionality(p: Polynomial, q: Polynomial) -> GaussianRational | None:
    """c with p == c * q exactly, or None."""
    if not q:
        return None
    mono, c = q.items()[0]
    ratio = p.coeff(mono) / c
    return ratio if p == q.scale(ratio) else None


# inner product ----------------------------------------------------------------

def _moment(a: int, c: int) -> int:
    # <z^a zbar^c> for one complex variable under exp(-|z|^2/2), normalized
    return (2 ** a) * factorial(a) if a == c else 0


def monomial_moment(mono) -> int:
    a, b, c, d = mono
    if a != c or b != d:
        return 0
    return _moment(a, c) * _moment(b, d)


def inner_product(p: Polynomial, q: Polynomial) -> GaussianRational:
    """Integral of p * conj(q) against the Gaussian weight, with <1,1> = 1."""
    # only pairs with matching (a - c, b - d) survive; bucket q by that key
    buckets: dict = {}
    for mono, c in q.items():
        buckets.setdefault((mono[0] - mono[2], mono[1] - mono[3]), []).append((mono, c))
    total = GaussianRational(0)
    for m1, c1 in p.items():
        for m2, c2 in buckets.get((m1[0] - m1[2], m1[1] - m1[3]), ()):
            # monomial of conj(z^m2) has exponents (c, d, a, b)
            mono = (m1[0] + m2[2], m1[1] + m2[3], m1[2] + m2[0], m1[3] + m2[1])
            w = monomial_moment(mono)
            if w:
                total = total + c1 * c2.conjugate() * w
    return total


def norm_squared(p: Polynomial) -> Fraction:
    return inner_product(p, p).re


# verification -----------------------------------------------------------------

@dataclass
class KetReport:
    label: str
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"ket": self.label, "passed": self.passed, "checks": dict(self.checks)}


def verify_ket(k: Ket) -> KetReport:
    """Exact checks: harmonic, L eigenvalue j, Lz eigenvalue m."""
    body = k.body
    checks = {
        "nonzero": bool(body),
        "harmonic": weyl_apply(generator(GeneratorTag.Delta), body).is_zero(),
        "L_eigenvalue": weyl_apply(generator(GeneratorTag.L), body) == body.scale(k.j.value),
        "Lz_eigenvalue": weyl_apply(generator(GeneratorTag.Lz), body) == body.scale(k.m.value),
    }
    return KetReport(k.label(), checks)


def parity_consistent(k: Ket) -> bool:
    """(a+b) - (c+d) is odd on every monomial exactly when j is half-integral."""
    want = 1 if k.j.is_half else 0
    return all(((m[0] + m[1]) - (m[2] + m[3])) % 2 == want for m in k.body.terms)


# export -----------------------------------------------------------------------

def _ket_record(k: Ket) -> dict:
    return {
        "j": str(k.j),
        "m": str(k.m),
        "norm_factor": str(k.norm_factor),
        "body": k.body.to_json_terms(),
    }


def multiplet_to_json(mult: Multiplet, normalized: bool = False) -> str:
    kets = []
    for k in mult:
        rec = _ket_record(k)
        if normalized:
            rec["scale"] = str(k.norm_factor.inverse())
        kets.append(rec)
    doc = {"j": str(mult.j), "direction": mult.direction, "normalized": normalized, "kets": kets}
    return json.dumps(doc, indent=2, sort_keys=True)


def multiplet_to_csv(mult: Multiplet) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "m", "norm_factor", "exp_z1", "exp_z2", "exp_z1b", "exp_z2b", "re", "im"])
    for k in mult:
        for mono, c in k.body.items():
            w.writerow([str(k.j), str(k.m), str(k.norm_factor), *mono, str(c.re), str(c.im)])
    return buf.getvalue()


def _latex_coeff(c: GaussianRational) -> tuple[str, str]:
    """(sign, magnitude) with an empty magnitude for unit coefficients."""

    def frac(x: Fraction) -> str:
        x = abs(x)
        return str(x.numerator) if x.denominator == 1 else rf"\frac{{{x.numerator}}}{{{x.denominator}}}"

    if c.im == 0 or c.re == 0:
        x = c.re if c.im == 0 else c.im
        unit = "" if c.im == 0 else "i"
        mag = "" if abs(x) == 1 else frac(x)
        return ("-" if x < 0 else "+"), f"{mag}{unit}"
    return "+", f"({c.re}{'+' if c.im > 0 else '-'}{abs(c.im)}i)"


def _latex_mono(mono) -> str:
    names = ("z_1", "z_2", r"\bar z_1", r"\bar z_2")
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}")
    return " ".join(parts)


def polynomial_latex(p: Polynomial, euler: bool = False) -> str:
    from .coords import monomial_euler_latex

    if not p:
        return "0"
    out = []
    for i, (mono, c) in enumerate(p.items()):
        sign, mag = _latex_coeff(c)
        term = monomial_euler_latex(mono) if euler else _latex_mono(mono)
        if not term:
            term = mag or "1"
        elif mag:
            term = rf"{mag}\,{term}"
        if i == 0:
            out.append(f"-{term}" if sign == "-" else term)
        else:
            out.append(f"{sign} {term}")
    return " ".join(out)


def multiplet_to_latex(mult: Multiplet) -> str:
    lines = [r"\begin{align*}"]
    for k in mult:
        lhs = rf"\lvert {k.j},{k.m}\rangle"
        scale = "" if k.norm_factor == 1 else rf"\tfrac{{1}}{{{_latex_radical(k.norm_factor)}}}"
        lines.append(rf"{lhs} &= {scale}\left({polynomial_latex(k.body)}\right) \\")
        lines.append(rf" &= {scale}\left({polynomial_latex(k.body, euler=True)}\right) \\")
    lines.append(r"\end{align*}")
    return "\n".join(lines) + "\n"


def _latex_radical(x: RadicalScalar) -> str:
    q = "" if x.q == 1 else str(x.q)
    return q if x.s == 1 else rf"{q}\sqrt{{{x.s}}}"
