"""Hydrogen-like eigenstates of the four-dimensional Schroedinger operator

    H = -(hbar^2 / 2 mu) [d^2/dr^2 + (2/r) d/dr - J^2 / r^2] - q^2 / r

with J^2 the Euler-coordinate Casimir.  For half-integer j the states are
Psi = exp(-a_j r) * |j,m>(z1, z2) with a_j = mu q^2 / ((j+1) hbar^2) and
E_j = -mu q^4 / (2 hbar^2 (j+1)^2).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .coords import (
    DEFAULT_SECOND_STEP,
    DEFAULT_STEP,
    EulerDerivatives,
    EulerPoint,
    euler_operator,
    euler_to_c2,
)
from .multiplet import HalfInt, Ket, ladder_coefficient, multiplet
from .weyl import GeneratorTag

log = logging.getLogger(__name__)

MIN_SIN = 0.05
MIN_R = 1e-3


@dataclass(frozen=True)
class PhysicalUnits:
    hbar: float = 1.0
    mu: float = 1.0
    q: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "mu", "q"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number, got {v!r}")

    def to_dict(self) -> dict:
        return {"hbar": self.hbar, "mu": self.mu, "q": self.q}


NATURAL = PhysicalUnits()


def decay_constant(j, units: PhysicalUnits = NATURAL) -> float:
    jv = float(HalfInt.parse(j))
    return units.mu * units.q**2 / ((jv + 1.0) * units.hbar**2)


def energy(j, units: PhysicalUnits = NATURAL) -> float:
    jv = float(HalfInt.parse(j))
    return -units.mu * units.q**4 / (2.0 * units.hbar**2 * (jv + 1.0) ** 2)


def energy_exact(j) -> Fraction:
    """E_j in natural units as an exact rational."""
    jv = HalfInt.parse(j).value
    return Fraction(-1, 2) / (jv + 1) ** 2


@dataclass(frozen=True)
class HydrogenState:
    j: HalfInt
    m: HalfInt
    ket: Ket
    decay: float
    energy: float
    units: PhysicalUnits = NATURAL

    def wavefunction(self, r, theta, phi, psi, decay: float | None = None):
        """exp(-a r) times the normalized ket at the Euler point."""
        a = self.decay if decay is None else decay
        z1, z2 = euler_to_c2(r, theta, phi, psi)
        return np.exp(-a * np.asarray(r, dtype=float)) * self.ket.evaluate(z1, z2)

    def field(self, decay: float | None = None):
        return lambda r, t, ph, ps: self.wavefunction(r, t, ph, ps, decay)


def _state_from_ket(ket: Ket, units: PhysicalUnits) -> HydrogenState:
    return HydrogenState(ket.j, ket.m, ket, decay_constant(ket.j, units), energy(ket.j, units), units)


def make_state(j, m, units: PhysicalUnits = NATURAL) -> HydrogenState:
    j = HalfInt.parse(j)
    m = HalfInt.parse(m)
    if not j.is_half:
        raise ValueError(f"hydrogen states are built for half-integer j, got {j}")
    if abs(m.twice) > j.twice or (j.twice - m.twice) % 2:
        raise ValueError(f"m={m} is not in the j={j} multiplet")
    return _state_from_ket(multiplet(j).ket(m), units)


def states(j, units: PhysicalUnits = NATURAL) -> list[HydrogenState]:
    j = HalfInt.parse(j)
    if not j.is_half:
        raise ValueError(f"hydrogen states are built for half-integer j, got {j}")
    return [_state_from_ket(k, units) for k in multiplet(j)]


def top_state_profile(j, r, theta, phi, psi, units: PhysicalUnits = NATURAL):
    """Closed form of Psi_{j,j}: 2^-(j-1/2) r^j (sin theta)^(j-1/2) cos(theta/2) e^{i(j phi + psi/2)} e^{-a r}."""
    jv = float(HalfInt.parse(j))
    a = decay_constant(j, units)
    r = np.asarray(r, dtype=float)
    return (
        2.0 ** -(jv - 0.5)
        * r**jv
        * np.sin(theta) ** (jv - 0.5)
        * np.cos(np.asarray(theta) / 2)
        * np.exp(1j * (jv * np.asarray(phi) + 0.5 * np.asarray(psi)))
        * np.exp(-a * r)
    )


def sample_points(j, n: int, rng: np.random.Generator, min_sin: float = MIN_SIN) -> EulerPoint:
    """r in [0.5, 5] (j+1), theta with sin(theta) >= min_sin."""
    jv = float(HalfInt.parse(j))
    t0 = float(np.arcsin(min_sin))
    return EulerPoint(
        rng.uniform(0.5, 5.0, size=n) * (jv + 1.0),
        rng.uniform(t0, np.pi - t0, size=n),
        rng.uniform(0.0, 2 * np.pi, size=n),
        rng.uniform(0.0, 4 * np.pi, size=n),
    )


def apply_hamiltonian(D: EulerDerivatives, units: PhysicalUnits = NATURAL) -> np.ndarray:
    r = D.point.r
    kinetic = D.dd("r") + 2.0 / r * D.d("r") - euler_operator(GeneratorTag.Casimir, D) / r**2
    return -(units.hbar**2) / (2.0 * units.mu) * kinetic - units.q**2 / r * D.value()


@dataclass
class ResidualReport:
    j: str
    m: str
    E: float
    samples: int
    max_rel_residual: float
    skipped_points: int
    fd_step: float
    fd_step_second: float
    units: dict
    per_point: list = field(default_factory=list)

    def to_dict(self, per_point: bool = False) -> dict:
        out = {
            "j": self.j,
            "m": self.m,
            "E": self.E,
            "samples": self.samples,
            "max_rel_residual": self.max_rel_residual,
            "skipped_points": self.skipped_points,
            "fd_step": self.fd_step,
            "fd_step_second": self.fd_step_second,
            "units": self.units,
        }
        if per_point:
            out["per_point"] = self.per_point
        return out


def hamiltonian_residual(
    s: HydrogenState,
    samples: int = 100,
    seed: int = 0,
    fd_step: float = DEFAULT_STEP,
    fd_step_second: float = DEFAULT_SECOND_STEP,
    energy_shift: float = 0.0,
    decay: float | None = None,
    points: EulerPoint | None = None,
) -> ResidualReport:
    """max |H Psi - E Psi| / |E Psi| over sample points.

    ``energy_shift`` (relative) and ``decay`` perturb the pair for negative
    controls.  Points closer than MIN_SIN to a pole or MIN_R to the origin are
    skipped and logged.
    """
    if points is None:
        points = sample_points(s.j, samples, np.random.default_rng(seed))
    pts = EulerPoint(*(np.asarray(c, dtype=float) for c in points))
    keep = (np.abs(np.sin(pts.theta)) >= MIN_SIN) & (pts.r >= MIN_R)
    skipped = int(np.size(keep) - np.count_nonzero(keep))
    if skipped:
        log.info("skipping %d points near a pole or the origin", skipped)
    pts = EulerPoint(*(c[keep] for c in pts))
    E = s.energy * (1.0 + energy_shift)
    D = EulerDerivatives(s.field(decay), pts, fd_step, fd_step_second)
    psi = D.value()
    res = apply_hamiltonian(D, s.units) - E * psi
    rel = np.abs(res) / np.abs(E * psi)
    per_point = [
        {"r": float(a), "theta": float(b), "phi": float(c), "psi": float(d), "rel_residual": float(e)}
        for a, b, c, d, e in zip(*pts, rel)
    ]
    return ResidualReport(
        str(s.j), str(s.m), E, int(np.count_nonzero(keep)), float(np.max(rel)) if rel.size else 0.0,
        skipped, fd_step, fd_step_second, s.units.to_dict(), per_point,
    )


@dataclass
class RadialReport:
    j: str
    decay: float
    E: float
    max_rel_err: float
    passed: bool

    def to_dict(self) -> dict:
        return {"j": self.j, "decay": self.decay, "E": self.E, "max_rel_err": self.max_rel_err, "passed": self.passed}


def radial_check(
    j, units: PhysicalUnits = NATURAL, decay: float | None = None, r_grid=None, tol: float = 1e-10
) -> RadialReport:
    """R = r^j exp(-a r) against the radial equation, using closed-form R', R''."""
    jv = float(HalfInt.parse(j))
    a = decay_constant(j, units) if decay is None else decay
    E = energy(j, units)
    r = np.linspace(0.1, 10.0, 400) if r_grid is None else np.asarray(r_grid, dtype=float)
    R = r**jv * np.exp(-a * r)
    dR = (jv / r - a) * R
    d2R = ((jv / r - a) ** 2 - jv / r**2) * R
    lhs = -(units.hbar**2) / (2 * units.mu) * (d2R + 2 * dR / r - jv * (jv + 1) * R / r**2) - units.q**2 * R / r
    err = float(np.max(np.abs(lhs - E * R) / np.abs(E * R)))
    return RadialReport(str(HalfInt.parse(j)), a, E, err, err < tol)


# spectral phi/psi derivatives ----------------------------------------------------

def _spectral_angles(field, pts: EulerPoint, n: int):
    """f, d/dpsi f, d^2/dpsi^2 f and d^2/dphi dpsi f by FFT over a 4pi x 4pi grid.

    Exact (to rounding) for trigonometric polynomials in phi/2 and psi/2 of
    degree below n/2, which covers every ket of degree < n.
    """
    shift = 4 * np.pi * np.arange(n) / n
    r = pts.r[:, None, None]
    t = pts.theta[:, None, None]
    ph = pts.phi[:, None, None] + shift[None, :, None]
    ps = pts.psi[:, None, None] + shift[None, None, :]
    vals = np.asarray(field(r, t, ph, ps), dtype=complex)
    coef = np.fft.fft2(vals, axes=(1, 2))
    k = np.fft.fftfreq(n, d=1.0 / n) * 0.5  # angular frequency for period 4 pi
    kph = k[None, :, None]
    kps = k[None, None, :]

    def back(c):
        return np.fft.ifft2(c, axes=(1, 2))[:, 0, 0]

    return back(coef), back(1j * kps * coef), back(-(kps**2) * coef), back(-(kph * kps) * coef)


def psi_correction(field, pts: EulerPoint, n: int = 32) -> tuple[np.ndarray, np.ndarray]:
    """(correction, field value): the psi-dependent part of J^2 f,
    -csc^2(theta) (d^2/dpsi^2 - 2 cos(theta) d^2/dphi dpsi) f."""
    pts = EulerPoint(*(np.asarray(c, dtype=float) for c in pts))
    f, _, dpp, dmix = _spectral_angles(field, pts, n)
    corr = -(dpp - 2 * np.cos(pts.theta) * dmix) / np.sin(pts.theta) ** 2
    return corr, f


@dataclass
class PsiReport:
    j: str
    samples: int
    max_rel_correction: float

    def to_dict(self) -> dict:
        return {"j": self.j, "samples": self.samples, "max_rel_correction": self.max_rel_correction}


def psi_independence(j, samples: int = 100, seed: int = 0, units: PhysicalUnits = NATURAL, n: int = 32) -> PsiReport:
    """Size of the d/dpsi terms of J^2 on exp(-a r)|j,m>, over all m, relative to max |f|.

    Vanishes for integer j, where the kets do not depend on psi.
    """
    j = HalfInt.parse(j)
    rng = np.random.default_rng(seed)
    pts = sample_points(j, samples, rng)
    a = decay_constant(j, units)
    worst = 0.0
    for k in multiplet(j):
        def fld(r, t, ph, ps, k=k):
            z1, z2 = euler_to_c2(r, t, ph, ps)
            return np.exp(-a * r) * k.evaluate(z1, z2)

        corr, f = psi_correction(fld, pts, n)
        worst = max(worst, float(np.max(np.abs(corr)) / np.max(np.abs(f))))
    return PsiReport(str(j), samples, worst)


def ladder_radial_commutation(
    j, samples: int = 100, seed: int = 0, units: PhysicalUnits = NATURAL, fd_step: float = DEFAULT_STEP
) -> float:
    """max over m of the relative mismatch between L- Psi_{j,m} (Euler form, FD) and
    sqrt((j+m)(j-m+1)) Psi_{j,m-1}."""
    sts = states(j, units)
    pts = sample_points(j, samples, np.random.default_rng(seed))
    worst = 0.0
    for upper, lower in zip(sts, sts[1:]):
        D = EulerDerivatives(upper.field(), pts, fd_step)
        got = euler_operator(GeneratorTag.Lminus, D)
        coeff = float(ladder_coefficient(upper.j, upper.m, "lower"))
        want = coeff * lower.wavefunction(*pts)
        worst = max(worst, float(np.max(np.abs(got - want)) / np.max(np.abs(want))))
    return worst


def lz_eigenvalue_error(s: HydrogenState, samples: int = 100, seed: int = 0, fd_step: float = DEFAULT_STEP) -> float:
    pts = sample_points(s.j, samples, np.random.default_rng(seed))
    D = EulerDerivatives(s.field(), pts, fd_step)
    got = euler_operator(GeneratorTag.Lz, D)
    want = float(s.m) * D.value()
    return float(np.max(np.abs(got - want)) / np.max(np.abs(D.value())))
