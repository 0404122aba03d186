"""Exact operator-identity tables for the angular-momentum / oscillator algebra.

Every entry is checked as an equation between normal-form operators (or, for
a few diagram maps, between polynomials).  Entries flagged ``erratum`` record
an identity exactly as typeset in the source material that turns out to be
false; each has a corrected companion entry in the same table, and the report
carries the exact residual of the printed form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .poly import ONE, Z1, Z1B, Z2, Z2B, Polynomial, VarId
from .scalar import GaussianRational
from .weyl import (
    GeneratorTag as T,
    WeylOperator,
    commutator,
    express_in_span,
    generator,
    span_rank,
    weyl_apply,
)

TABLE_IDS = (
    "schwinger_eq4_8",
    "gl2_eq35_38",
    "prop81",
    "heisenberg_eq46",
    "closure13",
    "alpha_beta_eq64",
    "casimir_eq2",
    "lemma122",
    "cor123",
)

HALF = Fraction(1, 2)
I = GaussianRational(0, 1)


@dataclass
class Identity:
    name: str
    lhs: object
    rhs: object
    source: str = ""
    erratum: bool = False
    note: str = ""


@dataclass
class Check:
    """A structural (non-equational) check, e.g. a rank or span membership."""

    name: str
    run: Callable[[], tuple[bool, str]]
    source: str = ""


@dataclass
class IdentityResult:
    identity: str
    status: str  # "pass" | "fail" | "erratum"
    residual: object = None
    source: str = ""
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        res = self.residual
        if isinstance(res, (WeylOperator, Polynomial)):
            res = res.to_json_terms()
        out = {"identity": self.identity, "status": self.status, "residual": res}
        if self.source:
            out["source"] = self.source
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class TableReport:
    table: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.results)

    def by_name(self, name: str) -> IdentityResult:
        for r in self.results:
            if r.identity == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "passed": self.passed,
            "counts": {
                s: sum(r.status == s for r in self.results) for s in ("pass", "fail", "erratum")
            },
            "results": [r.to_dict() for r in self.results],
        }


def _g(name: str) -> WeylOperator:
    return generator(T[name])


def M(p) -> WeylOperator:
    return WeylOperator.mul(p)


def _zero_like(x):
    return WeylOperator.zero() if isinstance(x, WeylOperator) else Polynomial()


def _as_operand(x, like):
    if isinstance(like, WeylOperator) and not isinstance(x, WeylOperator):
        return WeylOperator.mul(x) if isinstance(x, Polynomial) else WeylOperator.identity().scale(x)
    return x


def _evaluate(entry) -> IdentityResult:
    if isinstance(entry, Check):
        ok, detail = entry.run()
        return IdentityResult(entry.name, "pass" if ok else "fail", None if ok else detail, entry.source, detail if ok else "")
    lhs, rhs = entry.lhs, entry.rhs
    if isinstance(rhs, int) and rhs == 0:
        rhs = _zero_like(lhs)
    rhs = _as_operand(rhs, lhs)
    residual = lhs - rhs
    if residual.is_zero():
        status = "pass"
    else:
        status = "erratum" if entry.erratum else "fail"
    return IdentityResult(entry.name, status, None if residual.is_zero() else residual, entry.source, entry.note)


# tables -----------------------------------------------------------------------

def _schwinger(label: str, ax_dag, ay_dag, ax, ay) -> list:
    Jp = ax_dag * ay
    Jm = ay_dag * ax
    Jz = (ax_dag * ax - ay_dag * ay).scale(HALF)
    J = (ax_dag * ax + ay_dag * ay).scale(HALF)
    Id = WeylOperator.identity()
    h = HALF
    rows = [
        ("[a_x,a_x^+] = 1", commutator(ax, ax_dag), Id, "oscillator relations"),
        ("[a_y,a_y^+] = 1", commutator(ay, ay_dag), Id, "oscillator relations"),
        ("[J_z,J_+] = J_+", commutator(Jz, Jp), Jp, "oscillator relations"),
        ("[J_z,J_-] = -J_-", commutator(Jz, Jm), -Jm, "oscillator relations"),
        ("[J_+,J_-] = 2J_z", commutator(Jp, Jm), Jz.scale(2), "oscillator relations"),
        ("[J,J_+] = 0", commutator(J, Jp), 0, "oscillator relations"),
        ("[J,J_-] = 0", commutator(J, Jm), 0, "oscillator relations"),
        ("[J,J_z] = 0", commutator(J, Jz), 0, "oscillator relations"),
        ("[J,a_x] = -1/2 a_x", commutator(J, ax), ax.scale(-h), "oscillator relations"),
        ("[J,a_x^+] = 1/2 a_x^+", commutator(J, ax_dag), ax_dag.scale(h), "oscillator relations"),
        ("[J_z,a_x] = -1/2 a_x", commutator(Jz, ax), ax.scale(-h), "oscillator relations"),
        ("[J_z,a_x^+] = 1/2 a_x^+", commutator(Jz, ax_dag), ax_dag.scale(h), "oscillator relations"),
        ("[J,a_y] = -1/2 a_y", commutator(J, ay), ay.scale(-h), "oscillator relations"),
        ("[J,a_y^+] = 1/2 a_y^+", commutator(J, ay_dag), ay_dag.scale(h), "oscillator relations"),
        ("[J_z,a_y] = 1/2 a_y", commutator(Jz, ay), ay.scale(h), "oscillator relations"),
        ("[J_z,a_y^+] = -1/2 a_y^+", commutator(Jz, ay_dag), ay_dag.scale(-h), "oscillator relations"),
        ("[J_+,a_x] = -a_y", commutator(Jp, ax), -ay, "oscillator relations"),
        ("[J_+,a_x^+] = 0", commutator(Jp, ax_dag), 0, "oscillator relations"),
        ("[J_-,a_x] = 0", commutator(Jm, ax), 0, "oscillator relations"),
        ("[J_-,a_x^+] = a_y^+", commutator(Jm, ax_dag), ay_dag, "oscillator relations"),
        ("[J_+,a_y] = 0", commutator(Jp, ay), 0, "oscillator relations"),
        ("[J_+,a_y^+] = a_x^+", commutator(Jp, ay_dag), ax_dag, "oscillator relations"),
        ("[J_-,a_y] = -a_x", commutator(Jm, ay), -ax, "oscillator relations"),
        ("[J_-,a_y^+] = 0", commutator(Jm, ay_dag), 0, "oscillator relations"),
    ]
    return [Identity(f"{label} {n}", l, r, s) for n, l, r, s in rows]


def table_oscillator() -> list:
    g = _g
    first = _schwinger("corr1", g("J1pp"), g("J2pm"), g("J1mm"), g("J1mp"))
    second = _schwinger("corr2", g("J2pp"), g("J1pm"), g("J2mm"), g("J2mp"))
    return first + second


def table_gl2() -> list:
    L, Lz, Lp, Lm, Lx, Ly = (_g(n) for n in ("L", "Lz", "Lplus", "Lminus", "Lx", "Ly"))
    rows = [
        ("[L,L_z] = 0", commutator(L, Lz), 0, "gl(2) brackets"),
        ("[L,L_+] = 0", commutator(L, Lp), 0, "gl(2) brackets"),
        ("[L,L_-] = 0", commutator(L, Lm), 0, "gl(2) brackets"),
        ("[L,L_x] = 0", commutator(L, Lx), 0, "gl(2) brackets"),
        ("[L,L_y] = 0", commutator(L, Ly), 0, "gl(2) brackets"),
        ("[L_z,L_+] = L_+", commutator(Lz, Lp), Lp, "gl(2) brackets"),
        ("[L_z,L_-] = -L_-", commutator(Lz, Lm), -Lm, "gl(2) brackets"),
        ("[L_+,L_-] = 2L_z", commutator(Lp, Lm), Lz.scale(2), "gl(2) brackets"),
        ("L_x + iL_y = L_+", Lx + Ly.scale(I), Lp, "gl(2) brackets"),
        ("L_x - iL_y = L_-", Lx - Ly.scale(I), Lm, "gl(2) brackets"),
        ("[L_x,L_y] = iL_z", commutator(Lx, Ly), Lz.scale(I), "gl(2) brackets"),
        ("[L_z,L_x] = iL_y", commutator(Lz, Lx), Ly.scale(I), "gl(2) brackets"),
        ("[L_y,L_z] = iL_x", commutator(Ly, Lz), Lx.scale(I), "gl(2) brackets"),
        ("L_+L_- = L_x^2 + L_y^2 + L_z", Lp * Lm, Lx * Lx + Ly * Ly + Lz, "gl(2) brackets"),
        ("L_x^2 + L_y^2 + L_z^2 = L_+L_- + L_z^2 - L_z", Lx * Lx + Ly * Ly + Lz * Lz, Lp * Lm + Lz * Lz - Lz, "gl(2) brackets"),
    ]
    return [Identity(n, l, r, s) for n, l, r, s in rows]


# brackets of the L-operators with the j-operators: (L-operator, j-operator, coefficient, result j-operator or None)
L_J_BRACKETS = [
    ("L", "J1pp", HALF, "J1pp"), ("L", "J1pm", HALF, "J1pm"), ("L", "J1mp", -HALF, "J1mp"), ("L", "J1mm", -HALF, "J1mm"),
    ("L", "J2pp", HALF, "J2pp"), ("L", "J2pm", HALF, "J2pm"), ("L", "J2mp", -HALF, "J2mp"), ("L", "J2mm", -HALF, "J2mm"),
    ("Lz", "J1pp", HALF, "J1pp"), ("Lz", "J1pm", -HALF, "J1pm"), ("Lz", "J1mp", HALF, "J1mp"), ("Lz", "J1mm", -HALF, "J1mm"),
    ("Lz", "J2pp", HALF, "J2pp"), ("Lz", "J2pm", -HALF, "J2pm"), ("Lz", "J2mp", HALF, "J2mp"), ("Lz", "J2mm", -HALF, "J2mm"),
    ("Lplus", "J1pp", 0, None), ("Lplus", "J1pm", -1, "J2pp"), ("Lplus", "J1mp", 0, None), ("Lplus", "J1mm", -1, "J1mp"),
    ("Lplus", "J2pp", 0, None), ("Lplus", "J2pm", 1, "J1pp"), ("Lplus", "J2mp", 0, None), ("Lplus", "J2mm", 1, "J2mp"),
    ("Lminus", "J1pp", 1, "J2pm"), ("Lminus", "J1pm", 0, None), ("Lminus", "J1mp", -1, "J1mm"), ("Lminus", "J1mm", 0, None),
    ("Lminus", "J2pp", -1, "J1pm"), ("Lminus", "J2pm", 0, None), ("Lminus", "J2mp", 1, "J2mm"), ("Lminus", "J2mm", 0, None),
]

# the four doublets: ordered basis and the 2x2 matrices of L, Lz, L+, L-
# in the convention [X, w_k] = sum_i M[i][k] w_i.
DOUBLET_BLOCKS = [
    (("J1pp", "J2pm"), {"L": ((HALF, 0), (0, HALF)), "Lz": ((HALF, 0), (0, -HALF)),
                        "Lplus": ((0, 1), (0, 0)), "Lminus": ((0, 0), (1, 0))}),
    (("J1mp", "J1mm"), {"L": ((-HALF, 0), (0, -HALF)), "Lz": ((HALF, 0), (0, -HALF)),
                        "Lplus": ((0, -1), (0, 0)), "Lminus": ((0, 0), (-1, 0))}),
    (("J2pp", "J1pm"), {"L": ((HALF, 0), (0, HALF)), "Lz": ((HALF, 0), (0, -HALF)),
                        "Lplus": ((0, -1), (0, 0)), "Lminus": ((0, 0), (-1, 0))}),
    (("J2mp", "J2mm"), {"L": ((-HALF, 0), (0, -HALF)), "Lz": ((HALF, 0), (0, -HALF)),
                        "Lplus": ((0, 1), (0, 0)), "Lminus": ((0, 0), (1, 0))}),
]


def l_j_bracket_name(x: str, w: str) -> str:
    return f"[{x},{w}]"


def table_l_on_j() -> list:
    out = []
    for x, w, c, res in L_J_BRACKETS:
        rhs = _g(res).scale(c) if res else 0
        out.append(Identity(l_j_bracket_name(x, w), commutator(_g(x), _g(w)), rhs, "L-operators on j-operators"))
    for item, (basis, mats) in enumerate(DOUBLET_BLOCKS, start=1):
        for x, mat in mats.items():
            for k, wk in enumerate(basis):
                rhs = WeylOperator.zero()
                for i, wi in enumerate(basis):
                    if mat[i][k]:
                        rhs = rhs + _g(wi).scale(mat[i][k])
                out.append(Identity(f"item{item} {x} on {wk}", commutator(_g(x), _g(wk)), rhs, f"j-operator doublets, item {item}"))
    return out


H1 = ("J1pp", "J2pm", "J1mp", "J1mm")  # z1, z2, d/dz2, d/dz1
H2 = ("J2pp", "J1pm", "J2mp", "J2mm")  # z2bar, z1bar, d/dz1bar, d/dz2bar
# canonical pairs (derivative, variable) with [d, x] = Id
_CANONICAL = {("J1mm", "J1pp"), ("J1mp", "J2pm"), ("J2mp", "J1pm"), ("J2mm", "J2pp")}


def _heisenberg_value(a: str, b: str):
    if (a, b) in _CANONICAL:
        return WeylOperator.identity()
    if (b, a) in _CANONICAL:
        return -WeylOperator.identity()
    return 0


def table_heisenberg() -> list:
    out = []
    Id = WeylOperator.identity()
    for fam, label in ((H1, "h1"), (H2, "h2")):
        for a, b in combinations(fam, 2):
            out.append(Identity(f"{label} [{a},{b}]", commutator(_g(a), _g(b)), _heisenberg_value(a, b), "Heisenberg families"))
        for a in fam:
            out.append(Identity(f"{label} [Id,{a}] = 0", commutator(Id, _g(a)), 0, "Heisenberg families"))
        ops = [_g(a) for a in fam] + [Id]

        def dim_check(ops=ops, label=label):
            r = span_rank(ops)
            return r == 5, f"rank {r}"

        out.append(Check(f"{label} is 5-dimensional", dim_check, "Heisenberg families"))

        def nondegenerate(fam=fam):
            # the bracket form on the 4 oscillator generators must have full rank
            mat = []
            for a in fam:
                row = []
                for b in fam:
                    c = express_in_span(commutator(_g(a), _g(b)), [Id])
                    row.append(None if c is None else c[0])
                mat.append(row)
            if any(x is None for row in mat for x in row):
                return False, "bracket leaves span{Id}"
            # rows encoded as multiplication operators so span_rank can do the elimination
            rank = span_rank([M(Polynomial({(k, 0, 0, 0): mat[i][k] for k in range(4)})) for i in range(4)])
            return rank == 4, f"symplectic rank {rank}"

        out.append(Check(f"{label} bracket form is non-degenerate", nondegenerate, "Heisenberg families"))
    for a in H1:
        for b in H2:
            out.append(Identity(f"cross [{a},{b}] = 0", commutator(_g(a), _g(b)), 0, "Heisenberg families"))

    def intersection():
        r = span_rank([_g(a) for a in H1 + H2] + [Id])
        return r == 9, f"rank of h1+h2 is {r} (expected 9, so h1 and h2 meet in span(Id))"

    out.append(Check("h1 ∩ h2 = span(Id)", intersection, "Heisenberg families"))
    return out


EVEN13 = ("L", "Lz", "Lplus", "Lminus", "Id")
ODD13 = ("J1pp", "J1pm", "J1mp", "J1mm", "J2pp", "J2pm", "J2mp", "J2mm")
BASIS13 = ("L", "Lz", "Lplus", "Lminus") + ODD13 + ("Id",)


def table_closure() -> list:
    basis = [_g(n) for n in BASIS13]
    even = [_g(n) for n in EVEN13]
    odd = [_g(n) for n in ODD13]
    idspan = [WeylOperator.identity()]
    out = []

    def rank_check():
        r = span_rank(basis)
        return r == 13, f"rank {r}"

    out.append(Check("13 generators are linearly independent", rank_check, "13-generator algebra"))
    for i, a in enumerate(BASIS13):
        for b in BASIS13[i + 1:]:
            br = commutator(_g(a), _g(b))
            pa = 1 if a in ODD13 else 0
            pb = 1 if b in ODD13 else 0
            if pa == pb == 0:
                target, where = even, "even span"
            elif pa == pb == 1:
                target, where = idspan, "span(Id)"
            else:
                target, where = odd, "odd span"

            def member(br=br, target=target, where=where):
                c = express_in_span(br, target)
                return c is not None, f"bracket lands outside the {where}"

            out.append(Check(f"[{a},{b}] in {where}", member, "13-generator algebra"))
    return out


def table_half_step() -> list:
    Lp, Lm = _g("Lplus"), _g("Lminus")
    j1pm, j2pp, j1pp, j2pm = _g("J1pm"), _g("J2pp"), _g("J1pp"), _g("J2pm")
    rows = [
        Identity("alpha: L_+ j1+- = -j2++ + j1+- L_+", Lp * j1pm, -j2pp + j1pm * Lp, "half-step maps"),
        Identity("beta: L_- j2++ = -j1+- + j2++ L_-", Lm * j2pp, -j1pm + j2pp * Lm, "half-step maps"),
        Identity("j2+- |0,0> = z2", weyl_apply(j2pm, ONE), Z2, "half-step maps"),
        Identity("j1++ |0,0> = z1", weyl_apply(j1pp, ONE), Z1, "half-step maps"),
        Identity("j1+- z2 = z1bar z2", weyl_apply(j1pm, Z2), Z1B * Z2, "half-step maps"),
        Identity("j2++ z1 = z1 z2bar", weyl_apply(j2pp, Z1), Z1 * Z2B, "half-step maps"),
        Identity("alpha z2 = |z1|^2 - |z2|^2", weyl_apply(Lp * j1pm, Z2), Z1 * Z1B - Z2 * Z2B, "half-step maps"),
        Identity("beta z1 = |z2|^2 - |z1|^2", weyl_apply(Lm * j2pp, Z1), Z2 * Z2B - Z1 * Z1B, "half-step maps"),
    ]
    return rows


def _du_operators():
    d1, d2, d1b, d2b = (WeylOperator.d(v) for v in VarId)
    return (d1 + d1b, (d1 - d1b).scale(I), d2 + d2b, (d2 - d2b).scale(I))


def table_casimir() -> list:
    L, Lz, Lp, Lm, Lx, Ly, Delta = (_g(n) for n in ("L", "Lz", "Lplus", "Lminus", "Lx", "Ly", "Delta"))
    casimir = Lx * Lx + Ly * Ly + Lz * Lz
    r = M(Z1 * Z1B + Z2 * Z2B)
    du = _du_operators()
    lap_u = du[0] * du[0] + du[1] * du[1] + du[2] * du[2] + du[3] * du[3]
    return [
        Identity("catalog Casimir = L_x^2 + L_y^2 + L_z^2", _g("Casimir"), casimir, "Casimir in terms of L and Delta"),
        Identity(
            "L_x^2+L_y^2+L_z^2 = L^2 + L + (|z1|^2+|z2|^2) Delta",
            casimir, L * L + L + r * Delta, "Casimir in terms of L and Delta", erratum=True,
            note="printed sign of the Laplacian term is wrong; exact residual is -2(|z1|^2+|z2|^2) Delta",
        ),
        Identity(
            "L_x^2+L_y^2+L_z^2 = L^2 + L + (r/4) Delta",
            casimir, L * L + L + (r * Delta).scale(Fraction(1, 4)), "Casimir in terms of L and Delta, short form", erratum=True,
            note="with Delta = sum d^2/dz dzbar the factor r/4 belongs to the u-coordinate Laplacian; "
                 "the sign is wrong as well",
        ),
        Identity(
            "L_x^2+L_y^2+L_z^2 = L^2 + L - (|z1|^2+|z2|^2) Delta",
            casimir, L * L + L - r * Delta, "Casimir in terms of L and Delta, corrected sign",
        ),
        Identity(
            "L_+L_- + L_z^2 - L_z = L^2 + L - (|z1|^2+|z2|^2) Delta",
            Lp * Lm + Lz * Lz - Lz, L * L + L - r * Delta, "Casimir in terms of L and Delta, corrected sign",
        ),
        Identity("Delta = 1/4 (sum of d^2/du_k^2)", Delta, lap_u.scale(Fraction(1, 4)), "Casimir in terms of L and Delta"),
        Identity("[Casimir, L_z] = 0", commutator(casimir, Lz), 0, "Casimir in terms of L and Delta"),
        Identity("[Casimir, L_+] = 0", commutator(casimir, Lp), 0, "Casimir in terms of L and Delta"),
        Identity("[Casimir, L_-] = 0", commutator(casimir, Lm), 0, "Casimir in terms of L and Delta"),
    ]


def table_ladder_products() -> list:
    Lp, Lm = _g("Lplus"), _g("Lminus")
    j1pm, j2pm, j1pp, j2pp = _g("J1pm"), _g("J2pm"), _g("J1pp"), _g("J2pp")
    Id = WeylOperator.identity()
    a = j1pm * j2pm
    b = j2pp * j1pp
    return [
        Identity("L_+(j1+- j2+-) = (j1+- j2+-)L_+ + (j1+- j1++ - j2++ j2+-)", Lp * a, a * Lp + (j1pm * j1pp - j2pp * j2pm), "ladder action on j-operator products"),
        Identity("L_+(j1+- j2+-) = (j1+- j2+-)L_+ + (|z1|^2 - |z2|^2) Id", Lp * a, a * Lp + M(Z1 * Z1B - Z2 * Z2B) * Id, "ladder action on j-operator products"),
        Identity("L_-(j2++ j1++) = (j2++ j1++)L_- + (j2++ j2+- - j1+- j1++)", Lm * b, b * Lm + (j2pp * j2pm - j1pm * j1pp), "ladder action on j-operator products"),
        Identity("L_-(j2++ j1++) = (j2++ j1++)L_- + (|z2|^2 - |z1|^2) Id", Lm * b, b * Lm + M(Z2 * Z2B - Z1 * Z1B) * Id, "ladder action on j-operator products"),
    ]


def table_ladder_products_odd() -> list:
    Lp, Lm = _g("Lplus"), _g("Lminus")
    j1pm, j2pm, j1pp = _g("J1pm"), _g("J2pm"), _g("J1pp")
    a = j2pm * (j1pm * j2pm)
    return [
        Identity("[L_+, j2+-] = j1++", commutator(Lp, j2pm), j1pp, "ladder action on j-operator products"),
        Identity("[L_-, j1++] = j2+-", commutator(Lm, j1pp), j2pm, "ladder action on j-operator products"),
        Identity("L_+ j2+- = j2+- L_+ + j1++", Lp * j2pm, j2pm * Lp + j1pp, "ladder action on j-operator products"),
        Identity(
            "L_+ j2+-(j1+- j2+-) = j2+-(j1+- j2+-)L_+ + |z2|^2 z2 Id",
            Lp * a, a * Lp + M(Z2 * Z2 * Z2B), "ladder action on j-operator products", erratum=True,
            note="the bracket [L_+, j1+- j2+-] enters the derivation with the wrong sign; "
                 "exact residual is 2(|z1|^2 - |z2|^2) z2",
        ),
        Identity(
            "L_+ j2+-(j1+- j2+-) = j2+-(j1+- j2+-)L_+ + (2|z1|^2 - |z2|^2) z2 Id",
            Lp * a, a * Lp + M((Z1 * Z1B).scale(2) * Z2 - Z2 * Z2 * Z2B), "ladder action on j-operator products, corrected",
        ),
    ]


_TABLES = {
    "schwinger_eq4_8": table_oscillator,
    "gl2_eq35_38": table_gl2,
    "prop81": table_l_on_j,
    "heisenberg_eq46": table_heisenberg,
    "closure13": table_closure,
    "alpha_beta_eq64": table_half_step,
    "casimir_eq2": table_casimir,
    "lemma122": table_ladder_products,
    "cor123": table_ladder_products_odd,
}


def table_entries(table_id: str) -> list:
    try:
        return _TABLES[table_id]()
    except KeyError:
        raise ValueError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}") from None


def verify_table(table_id: str) -> TableReport:
    """Check every identity of a table exactly; failures carry the residual."""
    report = TableReport(table_id)
    for entry in table_entries(table_id):
        report.results.append(_evaluate(entry))
    return report


def verify_all() -> list[TableReport]:
    return [verify_table(t) for t in TABLE_IDS]
