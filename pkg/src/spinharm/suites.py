"""Verification suites behind ``spinharm verify``.

Each suite returns a list of check records {check, passed, detail}; the
symbolic suite also reports identities flagged as errata in the source
material (those do not count as failures).
"""
from __future__ import annotations

from itertools import combinations

import mpmath
import numpy as np

from . import coords, hydrogen
from .identities import TABLE_IDS, verify_table
from .multiplet import (
    Annihilated,
    HalfInt,
    inner_product,
    ladder,
    ladder_coefficient,
    multiplet,
    norm_squared,
    parity_consistent,
    proportionality,
    verify_ket,
)

SUITES = ("weyl", "repr", "coords", "hydrogen")


def _rec(check: str, passed: bool, detail=None) -> dict:
    out = {"check": check, "passed": bool(passed)}
    if detail is not None:
        out["detail"] = detail
    return out


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def weyl_suite(**_) -> list[dict]:
    out = []
    for t in TABLE_IDS:
        rep = verify_table(t)
        d = rep.to_dict()
        detail = {"counts": d["counts"]}
        bad = [r for r in d["results"] if r["status"] != "pass"]
        if bad:
            detail["non_passing"] = bad
        out.append(_rec(f"table {t}", rep.passed, detail))
    return out


def moment_by_quadrature(a: int) -> float:
    """<|z|^(2a)> under exp(-|z|^2/2) by 1-D radial quadrature."""
    f = lambda rho: rho ** (2 * a + 1) * mpmath.exp(-rho * rho / 2)
    g = lambda rho: rho * mpmath.exp(-rho * rho / 2)
    return float(mpmath.quad(f, [0, mpmath.inf]) / mpmath.quad(g, [0, mpmath.inf]))


def repr_suite(max_j=6, orth_max_j=4, **_) -> list[dict]:
    out = []
    max_j = HalfInt.parse(max_j)
    for twice in range(max_j.twice + 1):
        j = HalfInt(twice)
        top = multiplet(j, "from_top")
        bottom = multiplet(j, "from_bottom")
        kets_ok = all(verify_ket(k).passed for k in (*top, *bottom))
        ends = isinstance(ladder(top.kets[0], "raise"), Annihilated) and isinstance(
            ladder(top.kets[-1], "lower"), Annihilated
        )
        coeff_ok = True
        for mult, move in ((top, "lower"), (bottom, "raise")):
            seq = list(mult) if move == "lower" else list(reversed(mult.kets))
            for a, b in zip(seq, seq[1:]):
                c = ladder_coefficient(a.j, a.m, move)
                if b.norm_factor != a.norm_factor * c:
                    coeff_ok = False
                if norm_squared(b.body) != c.square() * norm_squared(a.body):
                    coeff_ok = False
        prop_ok = all(proportionality(a.body, b.body) is not None for a, b in zip(top, bottom))
        parity_ok = all(parity_consistent(k) for k in top)
        out.append(_rec(f"j={j} kets harmonic with L=j, Lz=m", kets_ok))
        out.append(_rec(f"j={j} top and bottom annihilated", ends))
        out.append(_rec(f"j={j} ladder coefficients", coeff_ok))
        out.append(_rec(f"j={j} from_top and from_bottom proportional", prop_ok))
        out.append(_rec(f"j={j} monomial parity", parity_ok))
    kets = [k for t in range(HalfInt.parse(orth_max_j).twice + 1) for k in multiplet(HalfInt(t))]
    nonzero = [(a.label(), b.label()) for a, b in combinations(kets, 2) if inner_product(a.body, b.body)]
    out.append(_rec(f"orthogonality of {len(kets)} kets", not nonzero, {"nonzero_pairs": nonzero[:10]}))
    worst = 0.0
    for a in range(7):
        exact = float(inner_product(_power_poly(a), _power_poly(a)).re)
        worst = max(worst, abs(exact - moment_by_quadrature(a)) / exact)
    out.append(_rec("moment rule matches quadrature", worst < 1e-8, {"max_rel_err": _num(worst)}))
    return out


def _power_poly(a: int):
    from .poly import Z1

    return Z1**a


def coords_suite(samples=200, seed=0, sweep_max_j=3, **_) -> list[dict]:
    rng = np.random.default_rng(seed)
    out = []
    u = rng.normal(size=(10_000, 4))
    x = coords.hopf_r4(u)
    err = float(np.max(np.abs(np.linalg.norm(x, axis=1) - np.sum(u * u, axis=1)) / np.sum(u * u, axis=1)))
    out.append(_rec("|hopf(u)| = |u|^2", err < 1e-12, {"max_rel_err": _num(err)}))
    hom = cover = 0.0
    for _ in range(samples):
        A, B = coords.random_su2(rng), coords.random_su2(rng)
        hom = max(hom, float(np.max(np.abs(coords.so3_from_su2(A @ B) - coords.so3_from_su2(A) @ coords.so3_from_su2(B)))))
        cover = max(cover, float(np.max(np.abs(coords.so3_from_su2(-A) - coords.so3_from_su2(A)))))
    out.append(_rec("rho(AB) = rho(A) rho(B)", hom < 1e-12, {"max_abs_err": _num(hom)}))
    out.append(_rec("rho(-A) = rho(A)", cover < 1e-12, {"max_abs_err": _num(cover)}))
    pts = coords.sample_points(1000, rng, min_sin=1e-2)
    back, _pole = coords.c2_to_euler(*coords.euler_to_c2(*pts))
    z0 = np.array(coords.euler_to_c2(*pts))
    z1 = np.array(coords.euler_to_c2(*back))
    rt = float(np.max(np.minimum(np.abs(z0 - z1), np.abs(z0 + z1))))
    ang = float(np.max(np.abs(np.array(back[:2]) - np.array(pts[:2]))))
    out.append(_rec("euler -> c2 -> euler round trip", max(rt, ang) < 1e-10, {"max_err": _num(max(rt, ang))}))
    for e in coords.consistency_sweep(sweep_max_j, samples, seed):
        out.append(_rec(f"euler form {e.tag} j={e.j}", e.max_rel_err < 1e-6, {"max_rel_err": _num(e.max_rel_err)}))
    return out


def hydrogen_suite(samples=100, seed=0, **_) -> list[dict]:
    out = []
    for j in ("1/2", "3/2", "5/2"):
        worst = 0.0
        energies = set()
        ctrl = float("inf")
        for s in hydrogen.states(j):
            r = hydrogen.hamiltonian_residual(s, samples, seed)
            worst = max(worst, r.max_rel_residual)
            energies.add(s.energy)
            ctrl = min(
                ctrl,
                hydrogen.hamiltonian_residual(s, samples, seed, energy_shift=0.01).max_rel_residual,
                hydrogen.hamiltonian_residual(s, samples, seed, decay=1.0).max_rel_residual,
            )
        E = hydrogen.energy(j)
        out.append(_rec(f"j={j} H Psi = E Psi for all m", worst < 1e-5, {"max_rel_residual": _num(worst), "E": _num(E)}))
        out.append(_rec(f"j={j} degenerate energy", len(energies) == 1 and float(hydrogen.energy_exact(j)) == E))
        out.append(_rec(f"j={j} negative controls", ctrl >= 1e3 * worst, {"min_control_residual": _num(ctrl)}))
        rc = hydrogen.radial_check(j)
        out.append(_rec(f"j={j} radial equation", rc.passed, {"max_rel_err": _num(rc.max_rel_err)}))
        lad = hydrogen.ladder_radial_commutation(j, samples, seed)
        out.append(_rec(f"j={j} L- passes the radial factor", lad < 1e-5, {"max_rel_err": _num(lad)}))
    for j in (0, 1, 2, 3):
        p = hydrogen.psi_independence(j, samples, seed)
        out.append(_rec(f"j={j} psi terms vanish", p.max_rel_correction < 1e-10, {"max_rel": _num(p.max_rel_correction)}))
    return out


_RUNNERS = {"weyl": weyl_suite, "repr": repr_suite, "coords": coords_suite, "hydrogen": hydrogen_suite}


def run_suite(name: str, **opts) -> list[dict]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, **opts)]
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return [{"suite": name, **r} for r in runner(**opts)]
