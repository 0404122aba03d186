"""Differential operators with polynomial coefficients in z1, z2, z1bar, z2bar.

An operator is stored in normal form, sum_k coeff_k(z) * d^k, with every
derivative to the right of its coefficient.  Operators act faithfully on
polynomials, so equality of normal forms is operator equality.
"""
from __future__ import annotations

import enum
import json
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .poly import ONE, Z1, Z1B, Z2, Z2B, Polynomial, VarId, poly_partial
from .scalar import GaussianRational

DerivIndex = tuple  # (p, q, r, s): d^p/dz1^p d^q/dz2^q d^r/dz1bar^r d^s/dz2bar^s

_NO_DERIV = (0, 0, 0, 0)
_DERIV_NAMES = ("d_z1", "d_z2", "d_z1b", "d_z2b")


class WeylOperator:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[DerivIndex, Polynomial] | None = None):
        clean = {}
        if terms:
            for idx, coeff in terms.items():
                idx = tuple(int(e) for e in idx)
                if len(idx) != 4 or min(idx) < 0:
                    raise ValueError(f"bad derivative index {idx}")
                if not isinstance(coeff, Polynomial):
                    coeff = Polynomial.const(coeff)
                if coeff:
                    clean[idx] = clean[idx] + coeff if idx in clean else coeff
                    if not clean[idx]:
                        del clean[idx]
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict) -> "WeylOperator":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors ---------------------------------------------------------
    @classmethod
    def identity(cls) -> "WeylOperator":
        return cls._from_clean({_NO_DERIV: ONE})

    @classmethod
    def zero(cls) -> "WeylOperator":
        return cls._from_clean({})

    @classmethod
    def mul(cls, p) -> "WeylOperator":
        """Multiplication by the polynomial ``p``."""
        if not isinstance(p, Polynomial):
            p = Polynomial.const(p)
        return cls({_NO_DERIV: p})

    @classmethod
    def d(cls, v: VarId, order: int = 1) -> "WeylOperator":
        idx = [0, 0, 0, 0]
        idx[VarId(v)] = order
        return cls._from_clean({tuple(idx): ONE})

    # inspection -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]),) + t[0], reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def order(self) -> int:
        """Highest total derivative order (-1 for the zero operator)."""
        return max((sum(k) for k in self._terms), default=-1)

    def flat(self) -> dict:
        """{(monomial, deriv_index): coefficient} view used for linear algebra."""
        out = {}
        for idx, poly in self._terms.items():
            for mono, c in poly._terms.items():
                out[(mono, idx)] = c
        return out

    # linear structure -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        out = dict(self._terms)
        for idx, p in other._terms.items():
            s = out[idx] + p if idx in out else p
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return WeylOperator._from_clean(out)

    def __neg__(self):
        return WeylOperator._from_clean({k: -p for k, p in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "WeylOperator":
        c = GaussianRational.coerce(c)
        if not c:
            return WeylOperator.zero()
        return WeylOperator._from_clean({k: p.scale(c) for k, p in self._terms.items()})

    def __mul__(self, other):
        """``A * B`` composes operators; ``A * c`` scales by an exact scalar."""
        if isinstance(other, WeylOperator):
            return weyl_compose(self, other)
        if isinstance(other, Polynomial):
            return weyl_compose(self, WeylOperator.mul(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return weyl_compose(WeylOperator.mul(other), self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = WeylOperator.identity()
        for _ in range(n):
            result = weyl_compose(result, self)
        return result

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, f: Polynomial) -> Polynomial:
        return weyl_apply(self, f)

    # text -----------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for idx, poly in self.items():
            ds = "*".join(
                (name if e == 1 else f"{name}^{e}") for name, e in zip(_DERIV_NAMES, idx) if e
            )
            ps = str(poly)
            if " + " in ps:
                ps = f"[{ps}]"
            parts.append(f"{ps}*{ds}" if ds else ps)
        return " + ".join(parts)

    def __repr__(self):
        return f"WeylOperator({self})"

    def to_json_terms(self) -> list[dict]:
        out = []
        for idx, poly in self.items():
            for t in poly.to_json_terms():
                out.append({"deriv": list(idx), **t})
        return out

    @classmethod
    def from_json_terms(cls, terms) -> "WeylOperator":
        grouped: dict = {}
        for t in terms:
            idx = tuple(int(e) for e in t["deriv"])
            grouped.setdefault(idx, []).append(t)
        return cls({idx: Polynomial.from_json_terms(ts) for idx, ts in grouped.items()})

    def to_json(self) -> str:
        return json.dumps(self.to_json_terms())


def _derivative_multi(p: Polynomial, idx: DerivIndex) -> Polynomial:
    for v, k in enumerate(idx):
        if k:
            p = poly_partial(p, VarId(v), k)
            if not p:
                break
    return p


def weyl_apply(A: WeylOperator, f: Polynomial) -> Polynomial:
    """Exact action of A on the polynomial f."""
    out = Polynomial()
    for idx, coeff in A._terms.items():
        df = _derivative_multi(f, idx)
        if df:
            out = out + coeff * df
    return out


def weyl_compose(A: WeylOperator, B: WeylOperator) -> WeylOperator:
    """Normal form of A o B via the generalized Leibniz rule.

    d^alpha (b * d^beta) = sum_{gamma <= alpha} C(alpha, gamma) (d^gamma b) d^(alpha - gamma + beta)
    """
    acc: dict = {}
    for alpha, a in A._terms.items():
        for beta, b in B._terms.items():
            for g0 in range(alpha[0] + 1):
                for g1 in range(alpha[1] + 1):
                    for g2 in range(alpha[2] + 1):
                        for g3 in range(alpha[3] + 1):
                            gamma = (g0, g1, g2, g3)
                            db = _derivative_multi(b, gamma)
                            if not db:
                                continue
                            mult = (
                                comb(alpha[0], g0) * comb(alpha[1], g1)
                                * comb(alpha[2], g2) * comb(alpha[3], g3)
                            )
                            term = a * db
                            if mult != 1:
                                term = term.scale(mult)
                            idx = tuple(alpha[k] - gamma[k] + beta[k] for k in range(4))
                            acc[idx] = acc[idx] + term if idx in acc else term
    return WeylOperator._from_clean({k: p for k, p in acc.items() if p})


def weyl_bracket(A: WeylOperator, B: WeylOperator, kind: str = "commutator") -> WeylOperator:
    """AB - BA (commutator) or AB + BA (anticommutator), in normal form."""
    ab = weyl_compose(A, B)
    ba = weyl_compose(B, A)
    if kind == "commutator":
        return ab - ba
    if kind == "anticommutator":
        return ab + ba
    raise ValueError(f"unknown bracket kind {kind!r}")


def commutator(A: WeylOperator, B: WeylOperator) -> WeylOperator:
    return weyl_bracket(A, B, "commutator")


# generator catalog ----------------------------------------------------------

class GeneratorTag(enum.Enum):
    L = "L"
    Lz = "Lz"
    Lplus = "Lplus"
    Lminus = "Lminus"
    Lx = "Lx"
    Ly = "Ly"
    Delta = "Delta"
    Casimir = "Casimir"
    Id = "Id"
    J1pp = "J1pp"
    J1pm = "J1pm"
    J1mp = "J1mp"
    J1mm = "J1mm"
    J2pp = "J2pp"
    J2pm = "J2pm"
    J2mp = "J2mp"
    J2mm = "J2mm"

    @property
    def parity(self) -> int:
        """Z2 grading: 1 for the eight Schwinger j-operators, 0 otherwise."""
        return 1 if self.name.startswith("J") else 0

    @classmethod
    def j_family(cls) -> list["GeneratorTag"]:
        return [t for t in cls if t.parity == 1]

    @classmethod
    def parse(cls, text: str) -> "GeneratorTag":
        key = text.strip()
        alias = _TAG_ALIASES.get(key.lower())
        if alias is not None:
            return alias
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown operator tag {text!r}") from None


_TAG_ALIASES = {
    "l+": GeneratorTag.Lplus,
    "l-": GeneratorTag.Lminus,
    "lplus": GeneratorTag.Lplus,
    "lminus": GeneratorTag.Lminus,
    "dz1": GeneratorTag.J1mm,
    "dz2": GeneratorTag.J1mp,
    "dz1b": GeneratorTag.J2mp,
    "dz2b": GeneratorTag.J2mm,
    "laplacian": GeneratorTag.Delta,
    "j2": GeneratorTag.Casimir,
}

HALF = Fraction(1, 2)
_I = GaussianRational(0, 1)


def _build_catalog() -> dict:
    D = WeylOperator.d
    M = WeylOperator.mul
    d1, d2, d1b, d2b = (D(v) for v in VarId)
    cat = {}
    cat[GeneratorTag.L] = (M(Z1) * d1 + M(Z2) * d2 + M(Z1B) * d1b + M(Z2B) * d2b).scale(HALF)
    cat[GeneratorTag.Lz] = (M(Z1) * d1 - M(Z2) * d2 - M(Z1B) * d1b + M(Z2B) * d2b).scale(HALF)
    cat[GeneratorTag.Lplus] = M(Z1) * d2 - M(Z2B) * d1b
    cat[GeneratorTag.Lminus] = -(M(Z1B) * d2b - M(Z2) * d1)
    lp, lm = cat[GeneratorTag.Lplus], cat[GeneratorTag.Lminus]
    cat[GeneratorTag.Lx] = (lp + lm).scale(HALF)
    cat[GeneratorTag.Ly] = (lp - lm).scale(GaussianRational(1) / GaussianRational(0, 2))
    cat[GeneratorTag.Delta] = d1 * d1b + d2 * d2b
    lx, ly, lz = cat[GeneratorTag.Lx], cat[GeneratorTag.Ly], cat[GeneratorTag.Lz]
    cat[GeneratorTag.Casimir] = lx * lx + ly * ly + lz * lz
    cat[GeneratorTag.Id] = WeylOperator.identity()
    cat[GeneratorTag.J1pp] = M(Z1)
    cat[GeneratorTag.J1pm] = M(Z1B)
    cat[GeneratorTag.J1mp] = d2
    cat[GeneratorTag.J1mm] = d1
    cat[GeneratorTag.J2pp] = M(Z2B)
    cat[GeneratorTag.J2pm] = M(Z2)
    cat[GeneratorTag.J2mp] = d1b
    cat[GeneratorTag.J2mm] = d2b
    return cat


_CATALOG: dict | None = None


def generator(tag: GeneratorTag | str) -> WeylOperator:
    """Normal-form operator for a catalog tag."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    if isinstance(tag, str):
        tag = GeneratorTag.parse(tag)
    return _CATALOG[tag]


# exact linear algebra over Q(i) ----------------------------------------------

def express_in_span(op: WeylOperator, basis: Sequence[WeylOperator]):
    """Coefficients c with op == sum c_k basis_k, or None if op is outside the span.

    Gaussian elimination over Q(i); the basis need not be independent (the
    first solution found is returned).
    """
    keys = set(op.flat())
    flats = [b.flat() for b in basis]
    for f in flats:
        keys.update(f)
    keys = sorted(keys)
    zero = GaussianRational(0)
    rows = [[f.get(k, zero) for f in flats] + [op.flat().get(k, zero)] for k in keys]
    ncol = len(basis)
    pivots = []
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = GaussianRational(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1]:
            return None
    coeffs = [zero] * ncol
    for i, col in enumerate(pivots):
        coeffs[col] = rows[i][-1]
    return coeffs


def span_rank(ops: Sequence[WeylOperator]) -> int:
    """Rank of the operators as vectors over Q(i)."""
    keys = sorted({k for o in ops for k in o.flat()})
    zero = GaussianRational(0)
    rows = [[o.flat().get(k, zero) for o in ops] for k in keys]
    rank = 0
    for col in range(len(ops)):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = GaussianRational(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
