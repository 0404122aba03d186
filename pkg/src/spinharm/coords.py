"""Hurwitz-Hopf map, Euler-angle coordinates on C^2 and the Euler-form operators.

Points are vectorized: every function accepts scalars or equal-shape numpy
arrays.  Euler coordinates are (r, theta, phi, psi) with
    z1 = sqrt(r) exp(i(psi+phi)/2) cos(theta/2)
    z2 = sqrt(r) exp(i(psi-phi)/2) sin(theta/2),
so psi has period 4 pi and (psi + 2 pi) maps z to -z.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from .weyl import GeneratorTag

TWO_PI = 2.0 * np.pi
FOUR_PI = 4.0 * np.pi

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class DomainError(ValueError):
    """Point outside the domain where a map or operator is defined."""


class EulerPoint(NamedTuple):
    r: object
    theta: object
    phi: object
    psi: object


class C2Point(NamedTuple):
    z1: object
    z2: object


# Hopf map ---------------------------------------------------------------------

def hopf_r4(u) -> np.ndarray:
    """(u1,u2,u3,u4) -> (x1,x2,x3); last axis holds the coordinates."""
    u = np.asarray(u, dtype=float)
    if u.shape[-1] != 4:
        raise ValueError("hopf_r4 expects 4 coordinates on the last axis")
    u1, u2, u3, u4 = np.moveaxis(u, -1, 0)
    x1 = 2.0 * (u1 * u3 + u2 * u4)
    x2 = 2.0 * (u2 * u3 - u1 * u4)
    x3 = u1 * u1 + u2 * u2 - u3 * u3 - u4 * u4
    return np.stack([x1, x2, x3], axis=-1)


def hopf_c2(z1, z2) -> np.ndarray:
    """Same map with z1 = u1 + i u2, z2 = u3 + i u4."""
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    w = z1 * np.conj(z2)
    return np.stack([2.0 * w.real, 2.0 * w.imag, abs(z1) ** 2 - abs(z2) ** 2], axis=-1)


def r4_to_c2(u) -> C2Point:
    u = np.asarray(u, dtype=float)
    return C2Point(u[..., 0] + 1j * u[..., 1], u[..., 2] + 1j * u[..., 3])


# Euler coordinates ------------------------------------------------------------

def euler_to_c2(r, theta, phi, psi) -> C2Point:
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    sr = np.sqrt(r)
    z1 = sr * np.exp(0.5j * (psi + phi)) * np.cos(0.5 * np.asarray(theta))
    z2 = sr * np.exp(0.5j * (np.asarray(psi) - phi)) * np.sin(0.5 * np.asarray(theta))
    if z1.ndim == 0:
        return C2Point(complex(z1), complex(z2))
    return C2Point(z1, z2)


def c2_to_euler(z1, z2, pole_tol: float = 0.0) -> tuple[EulerPoint, object]:
    """Inverse of euler_to_c2 on the double cover.

    Returns (point, pole) where ``pole`` flags z1 == 0 or z2 == 0 (up to
    ``pole_tol`` relative to sqrt(r)).  At z2 = 0 only phi + psi is defined and
    phi is set to 0; at z1 = 0 only psi - phi is defined and phi is set to 0.
    """
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    a1 = abs(z1) ** 2
    a2 = abs(z2) ** 2
    r = a1 + a2
    if np.any(r <= 0):
        raise DomainError("the origin has no Euler coordinates")
    theta = np.arccos(np.clip((a1 - a2) / r, -1.0, 1.0))
    scale = np.sqrt(r) * pole_tol
    north = abs(z2) <= scale
    south = abs(z1) <= scale
    phi = np.mod(np.angle(z1 * np.conj(z2)), TWO_PI)
    psi = 2.0 * np.angle(z1) - phi
    phi = np.where(north | south, 0.0, phi)
    psi = np.where(north, 2.0 * np.angle(z1), psi)
    psi = np.where(south, 2.0 * np.angle(z2), psi)
    psi = np.mod(psi, FOUR_PI)
    pole = north | south
    if pole.ndim == 0:
        return EulerPoint(float(r), float(theta), float(phi), float(psi)), bool(pole)
    return EulerPoint(r, theta, phi, psi), pole


def same_on_double_cover(p: EulerPoint, q: EulerPoint, tol: float = 1e-10) -> bool:
    """Equal up to psi -> psi + 2 pi (i.e. z -> -z)."""
    za = np.array(euler_to_c2(*p))
    zb = np.array(euler_to_c2(*q))
    return bool(np.all(np.minimum(abs(za - zb), abs(za + zb)) < tol * max(1.0, np.max(abs(za)))))


# SU(2) and SO(3) --------------------------------------------------------------

def su2_from_euler(theta, phi, psi) -> np.ndarray:
    """diag(e^{-i psi/2}, e^{i psi/2}) . R(theta/2) . diag(e^{-i phi/2}, e^{i phi/2})."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array(
        [
            [np.exp(-0.5j * (psi + phi)) * c, -np.exp(-0.5j * (psi - phi)) * s],
            [np.exp(0.5j * (psi - phi)) * s, np.exp(0.5j * (psi + phi)) * c],
        ]
    )


def is_su2(A, tol: float = 1e-12) -> bool:
    A = np.asarray(A, dtype=complex)
    if A.shape != (2, 2):
        return False
    return bool(
        np.allclose(A.conj().T @ A, np.eye(2), atol=tol, rtol=0)
        and abs(np.linalg.det(A) - 1) < tol
    )


def so3_from_su2(A, tol: float = 1e-12) -> np.ndarray:
    """Matrix of X -> A X A^dagger on su(2), in the (x, y, z) basis."""
    A = np.asarray(A, dtype=complex)
    if not is_su2(A, tol=max(tol, 1e-12)):
        raise DomainError("so3_from_su2 needs a unitary 2x2 matrix with det 1")
    Ad = A.conj().T
    R = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            R[i, j] = 0.5 * np.trace(SIGMA[i] @ A @ SIGMA[j] @ Ad).real
    return R


def rot_z(a: float) -> np.ndarray:
    c, s = np.cos(a), np.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_y(a: float) -> np.ndarray:
    c, s = np.cos(a), np.sin(a)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def random_su2(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    a, c = q[0] + 1j * q[1], q[2] + 1j * q[3]
    return np.array([[a, -np.conj(c)], [c, np.conj(a)]])


# Euler form of monomials --------------------------------------------------------

def monomial_euler(mono) -> tuple[Fraction, int, int, Fraction, Fraction]:
    """z1^a z2^b z1bar^c z2bar^d = r^p cos^k(theta/2) sin^l(theta/2) e^{i(u phi + v psi)}.

    Returns (p, k, l, u, v).
    """
    a, b, c, d = mono
    p = Fraction(a + b + c + d, 2)
    u = Fraction((a - c) - (b - d), 2)
    v = Fraction((a - c) + (b - d), 2)
    return p, a + c, b + d, u, v


def _latex_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return rf"{'-' if x < 0 else ''}\tfrac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def monomial_euler_latex(mono) -> str:
    p, k, l, u, v = monomial_euler(mono)
    parts = []
    if p:
        parts.append("r" if p == 1 else f"r^{{{_latex_frac(p)}}}")
    if k:
        parts.append(r"\cos\tfrac{\theta}{2}" if k == 1 else rf"\cos^{{{k}}}\tfrac{{\theta}}{{2}}")
    if l:
        parts.append(r"\sin\tfrac{\theta}{2}" if l == 1 else rf"\sin^{{{l}}}\tfrac{{\theta}}{{2}}")
    phase = []
    for coef, sym in ((u, r"\phi"), (v, r"\psi")):
        if coef:
            c = "" if coef == 1 else ("-" if coef == -1 else _latex_frac(coef))
            phase.append(f"{c}{sym}")
    if phase:
        expo = "+".join(phase).replace("+-", "-")
        if len(phase) == 1:
            neg = expo.startswith("-")
            parts.append(rf"e^{{{'-' if neg else ''}i{expo.lstrip('-')}}}")
        else:
            parts.append(rf"e^{{i({expo})}}")
    return " ".join(parts)


# Euler-form differential operators ----------------------------------------------

# 4th-order central stencils
_D1 = ((-2, 1.0 / 12), (-1, -8.0 / 12), (1, 8.0 / 12), (2, -1.0 / 12))
_D2 = ((-2, -1.0 / 12), (-1, 16.0 / 12), (0, -30.0 / 12), (1, 16.0 / 12), (2, -1.0 / 12))

DEFAULT_STEP = 1e-5
DEFAULT_SECOND_STEP = 2e-3
DEFAULT_POLE_THRESHOLD = 1e-3

EULER_TAGS = (
    GeneratorTag.L,
    GeneratorTag.Lz,
    GeneratorTag.Lplus,
    GeneratorTag.Lminus,
    GeneratorTag.Lx,
    GeneratorTag.Ly,
    GeneratorTag.J1mm,  # d/dz1
    GeneratorTag.J1mp,  # d/dz2
    GeneratorTag.J2mp,  # d/dz1bar
    GeneratorTag.J2mm,  # d/dz2bar
    GeneratorTag.Casimir,
)

Field = Callable[[object, object, object, object], object]


class EulerDerivatives:
    """Lazily computed finite-difference partials of a field at fixed points.

    First derivatives use ``h``; second and mixed derivatives use ``h2``.  A
    fourth-order second-difference loses about eps/h2^2 to cancellation, so
    its step is chosen separately (the optimum sits near eps^(1/6)).
    """

    _AXES = {"r": 0, "theta": 1, "phi": 2, "psi": 3}

    def __init__(self, field: Field, point: EulerPoint, h: float = DEFAULT_STEP, h2: float | None = None):
        if h <= 0:
            raise ValueError("finite-difference step must be positive")
        self.field = field
        self.point = EulerPoint(*(np.asarray(c, dtype=float) for c in point))
        self.h = h
        self.h2 = DEFAULT_SECOND_STEP if h2 is None else h2
        self._cache: dict = {}

    def _at(self, offsets: dict) -> np.ndarray:
        coords = list(self.point)
        for axis, delta in offsets.items():
            coords[self._AXES[axis]] = coords[self._AXES[axis]] + delta
        return np.asarray(self.field(*coords), dtype=complex)

    def value(self) -> np.ndarray:
        if "f" not in self._cache:
            self._cache["f"] = self._at({})
        return self._cache["f"]

    def d(self, axis: str) -> np.ndarray:
        key = ("d", axis)
        if key not in self._cache:
            h = self.h
            self._cache[key] = sum(w * self._at({axis: k * h}) for k, w in _D1) / h
        return self._cache[key]

    def dd(self, axis: str) -> np.ndarray:
        key = ("dd", axis)
        if key not in self._cache:
            h = self.h2
            acc = 0
            for k, w in _D2:
                acc = acc + w * (self.value() if k == 0 else self._at({axis: k * h}))
            self._cache[key] = acc / (h * h)
        return self._cache[key]

    def dmix(self, a: str, b: str) -> np.ndarray:
        key = ("dm",) + tuple(sorted((a, b)))
        if key not in self._cache:
            h = self.h2
            acc = 0
            for k, wk in _D1:
                for l, wl in _D1:
                    acc = acc + wk * wl * self._at({a: k * h, b: l * h})
            self._cache[key] = acc / (h * h)
        return self._cache[key]


def _check_domain(point: EulerPoint, pole_threshold: float) -> None:
    r = np.asarray(point.r, dtype=float)
    s = np.abs(np.sin(np.asarray(point.theta, dtype=float)))
    if np.any(r <= 0):
        raise DomainError("Euler-form operators need r > 0")
    if np.any(s < pole_threshold):
        raise DomainError(f"point too close to a pole: sin(theta) < {pole_threshold}")


def euler_operator(tag, D: EulerDerivatives, variant: str = "corrected") -> np.ndarray:
    """Apply the Euler-coordinate expression of ``tag`` using derivatives ``D``.

    ``variant="printed"`` uses L- without its leading minus sign and the
    Casimir with csc(theta) on d^2/dphi^2 and on the mixed term, as typeset in
    the short-form summary; it exists to demonstrate that those forms disagree
    with the exact operators.
    """
    tag = GeneratorTag.parse(tag) if isinstance(tag, str) else GeneratorTag(tag)
    r, th, ph, ps = D.point
    cot = np.cos(th) / np.sin(th)
    csc = 1.0 / np.sin(th)
    if tag is GeneratorTag.L:
        return r * D.d("r")
    if tag is GeneratorTag.Lz:
        return -1j * D.d("phi")
    if tag is GeneratorTag.Lplus:
        return np.exp(1j * ph) * (D.d("theta") + 1j * cot * D.d("phi") - 1j * csc * D.d("psi"))
    if tag is GeneratorTag.Lminus:
        sign = 1.0 if variant == "printed" else -1.0
        return sign * np.exp(-1j * ph) * (D.d("theta") - 1j * cot * D.d("phi") + 1j * csc * D.d("psi"))
    if tag is GeneratorTag.Lx:
        ang = cot * D.d("phi") - csc * D.d("psi")
        return 1j * (np.sin(ph) * D.d("theta") + np.cos(ph) * ang)
    if tag is GeneratorTag.Ly:
        ang = cot * D.d("phi") - csc * D.d("psi")
        return -1j * (np.cos(ph) * D.d("theta") - np.sin(ph) * ang)
    if tag in (GeneratorTag.J1mm, GeneratorTag.J2mp):
        # d/dz1 and d/dz1bar
        c, s = np.cos(th / 2), np.sin(th / 2)
        sgn = -1.0 if tag is GeneratorTag.J1mm else 1.0
        pref = np.sqrt(r) * np.exp(sgn * 0.5j * (ps + ph))
        return pref * (
            c * D.d("r") - s * D.d("theta") / r + sgn * 0.5j / (r * c) * (D.d("phi") + D.d("psi"))
        )
    if tag in (GeneratorTag.J1mp, GeneratorTag.J2mm):
        # d/dz2 and d/dz2bar
        c, s = np.cos(th / 2), np.sin(th / 2)
        sgn = -1.0 if tag is GeneratorTag.J1mp else 1.0
        pref = np.sqrt(r) * np.exp(sgn * 0.5j * (ps - ph))
        return pref * (
            s * D.d("r") + c * D.d("theta") / r - sgn * 0.5j / (r * s) * (D.d("phi") - D.d("psi"))
        )
    if tag is GeneratorTag.Casimir:
        base = D.dd("theta") + cot * D.d("theta")
        if variant == "printed":
            return -(base + csc * D.dd("phi")) - (csc**2 * D.dd("psi") - 2 * csc * D.dmix("phi", "psi"))
        return -(base + csc**2 * (D.dd("phi") + D.dd("psi") - 2 * np.cos(th) * D.dmix("phi", "psi")))
    raise ValueError(f"no Euler-coordinate form for {tag.value}")


def euler_apply(
    tag,
    field: Field,
    point: EulerPoint,
    h: float = DEFAULT_STEP,
    h2: float | None = None,
    pole_threshold: float = DEFAULT_POLE_THRESHOLD,
    variant: str = "corrected",
):
    """Finite-difference evaluation of the Euler-form operator ``tag`` on ``field``."""
    point = EulerPoint(*point)
    _check_domain(point, pole_threshold)
    out = euler_operator(tag, EulerDerivatives(field, point, h, h2), variant)
    return complex(out) if np.ndim(out) == 0 else out


def polynomial_field(p) -> Field:
    """Field (r, theta, phi, psi) -> p(z1, z2) for an exact polynomial p."""
    from .poly import poly_eval

    def f(r, theta, phi, psi):
        z1, z2 = euler_to_c2(r, theta, phi, psi)
        return poly_eval(p, z1, z2)

    return f


def sample_points(n: int, rng: np.random.Generator, r_range=(0.5, 2.0), min_sin: float = 0.1) -> EulerPoint:
    """Random non-pole points: theta uniform on [asin(min_sin), pi - asin(min_sin)]."""
    t0 = float(np.arcsin(min_sin))
    return EulerPoint(
        rng.uniform(*r_range, size=n),
        rng.uniform(t0, np.pi - t0, size=n),
        rng.uniform(0.0, TWO_PI, size=n),
        rng.uniform(0.0, FOUR_PI, size=n),
    )


@dataclass
class SweepEntry:
    tag: str
    j: str
    samples: int
    max_rel_err: float
    fd_step: float
    fd_step_second: float

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "j": self.j,
            "samples": self.samples,
            "max_rel_err": self.max_rel_err,
            "fd_step": self.fd_step,
            "fd_step_second": self.fd_step_second,
        }


def relative_error(approx, exact, field_values) -> float:
    """max |approx - exact| over the sample, relative to max(|exact|, |field|)."""
    scale = max(float(np.max(np.abs(exact))), float(np.max(np.abs(field_values))))
    if scale == 0.0:
        return float(np.max(np.abs(approx)))
    return float(np.max(np.abs(approx - exact)) / scale)


def consistency_sweep(
    j_max=3,
    samples: int = 200,
    seed: int = 0,
    tags=EULER_TAGS,
    h: float = DEFAULT_STEP,
    h2: float | None = None,
    min_sin: float = 0.1,
    variant: str = "corrected",
) -> list[SweepEntry]:
    """Compare Euler-form operators with the exact action on every ket up to j_max."""
    from .multiplet import HalfInt, multiplet
    from .poly import poly_eval
    from .weyl import generator, weyl_apply

    j_max = HalfInt.parse(j_max)
    rng = np.random.default_rng(seed)
    pts = sample_points(samples, rng, min_sin=min_sin)
    z1, z2 = euler_to_c2(*pts)
    tags = [GeneratorTag.parse(t) if isinstance(t, str) else GeneratorTag(t) for t in tags]
    h2v = DEFAULT_SECOND_STEP if h2 is None else h2
    out = []
    for twice in range(0, j_max.twice + 1):
        j = HalfInt(twice)
        worst = {t: 0.0 for t in tags}
        for ket in multiplet(j):
            D = EulerDerivatives(polynomial_field(ket.body), pts, h, h2)
            fvals = D.value()
            for t in tags:
                exact = poly_eval(weyl_apply(generator(t), ket.body), z1, z2)
                approx = euler_operator(t, D, variant)
                worst[t] = max(worst[t], relative_error(approx, exact, fvals))
        for t in tags:
            out.append(SweepEntry(t.value, str(j), samples, worst[t], h, h2v))
    return out
