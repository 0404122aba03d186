import logging
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from spinharm import hydrogen
from spinharm.coords import EulerPoint
from spinharm.hydrogen import (
    PhysicalUnits,
    decay_constant,
    energy,
    energy_exact,
    top_state_profile,
    hamiltonian_residual,
    make_state,
    psi_independence,
    radial_check,
    states,
)
from spinharm.poly import Z1, Z2


class TestEnergy:
    def test_frozen(self):
        assert energy("1/2") == pytest.approx(-2 / 9, rel=1e-15)
        assert energy("3/2") == pytest.approx(-2 / 25, rel=1e-15)
        assert energy_exact("5/2") == Fraction(-2, 49)

    def test_units(self):
        u = PhysicalUnits(hbar=2.0, mu=3.0, q=0.5)
        assert energy("1/2", u) == pytest.approx(-3.0 * 0.5**4 / (2 * 4.0 * 1.5**2))
        assert decay_constant("1/2", u) == pytest.approx(3.0 * 0.25 / (1.5 * 4.0))

    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan")])
    def test_bad_units(self, bad):
        with pytest.raises(ValueError):
            PhysicalUnits(hbar=bad)


class TestStates:
    def test_half_top(self, rng):
        s = make_state("1/2", "1/2")
        assert s.ket.body == Z1
        r, th, ph, ps = 1.7, 0.8, 0.3, 2.2
        want = np.sqrt(r) * np.exp(-2 * r / 3) * np.exp(0.5j * (ph + ps)) * np.cos(th / 2)
        assert s.wavefunction(r, th, ph, ps) == pytest.approx(want, rel=1e-14)

    def test_half_bottom(self):
        assert make_state("1/2", "-1/2").ket.body == Z2

    @pytest.mark.parametrize("j", ["1/2", "3/2", "5/2", "7/2"])
    def test_top_state_matches_closed_form(self, j, rng):
        s = make_state(j, j)
        pts = hydrogen.sample_points(j, 50, rng)
        ratio = s.wavefunction(*pts) / top_state_profile(j, *pts)
        assert np.allclose(ratio, ratio[0], rtol=1e-12)

    def test_three_halves_angular(self, rng):
        # sin(theta) cos(theta/2) e^{i(3 phi/2 + psi/2)}
        s = make_state("3/2", "3/2")
        r = 1.0
        pts = EulerPoint(np.full(20, r), rng.uniform(0.2, 3, 20), rng.uniform(0, 6, 20), rng.uniform(0, 12, 20))
        want = np.sin(pts.theta) * np.cos(pts.theta / 2) * np.exp(1j * (1.5 * pts.phi + 0.5 * pts.psi))
        ratio = s.wavefunction(*pts) / want
        assert np.allclose(ratio, ratio[0], rtol=1e-12)

    @pytest.mark.parametrize("j,m", [(1, 0), ("1/2", "3/2"), ("3/2", "1")])
    def test_rejects(self, j, m):
        with pytest.raises(ValueError):
            make_state(j, m)

    def test_states_count(self):
        assert [str(s.m) for s in states("3/2")] == ["3/2", "1/2", "-1/2", "-3/2"]


def _symbolic_residual(j2: int):
    """H Psi - E Psi for the top state, symbolically (corrected Casimir)."""
    r, th, ph, ps = sp.symbols("r theta phi psi", positive=True)
    j = sp.Rational(j2, 2)
    a = 1 / (j + 1)
    E = -sp.Rational(1, 2) / (j + 1) ** 2
    z1 = sp.sqrt(r) * sp.cos(th / 2) * sp.exp(sp.I * (ph + ps) / 2)
    z2b = sp.sqrt(r) * sp.sin(th / 2) * sp.exp(-sp.I * (ps - ph) / 2)
    n = (j2 - 1) // 2
    f = z1 * (z1 * z2b) ** n * sp.exp(-a * r)
    cas = -(
        sp.diff(f, th, 2)
        + sp.cot(th) * sp.diff(f, th)
        + (sp.diff(f, ph, 2) + sp.diff(f, ps, 2) - 2 * sp.cos(th) * sp.diff(f, ph, ps)) / sp.sin(th) ** 2
    )
    H = -sp.Rational(1, 2) * (sp.diff(f, r, 2) + 2 / r * sp.diff(f, r) - cas / r**2) - f / r
    return sp.simplify(sp.expand_trig(sp.simplify((H - E * f) / f)))


@pytest.mark.parametrize("j2", [1, 3, 5])
def test_eigenpair_symbolically(j2):
    assert _symbolic_residual(j2) == 0


class TestResidual:
    def test_top_half(self):
        rep = hamiltonian_residual(make_state("1/2", "1/2"), 100, 0)
        assert rep.max_rel_residual < 1e-5 and rep.samples == 100

    def test_degenerate_three_halves(self):
        reps = [hamiltonian_residual(s, 100, 0) for s in states("3/2")]
        assert max(r.max_rel_residual for r in reps) < 1e-5
        assert len({r.E for r in reps}) == 1

    def test_energy_control(self):
        rep = hamiltonian_residual(make_state("1/2", "1/2"), 100, 0, energy_shift=0.01)
        assert rep.max_rel_residual == pytest.approx(0.01 / 1.01, rel=1e-3)

    def test_decay_control(self):
        rep = hamiltonian_residual(make_state("5/2", "1/2"), 100, 0, decay=1.0)
        assert rep.max_rel_residual > 1e-2

    def test_physical_units(self):
        u = PhysicalUnits(hbar=1.3, mu=0.7, q=1.1)
        rep = hamiltonian_residual(make_state("3/2", "-1/2", u), 60, 2)
        assert rep.max_rel_residual < 1e-5

    def test_skips_pole_points(self, caplog):
        s = make_state("1/2", "1/2")
        pts = EulerPoint(np.array([1.0, 1.0]), np.array([1e-4, 1.0]), np.zeros(2), np.zeros(2))
        with caplog.at_level(logging.INFO, logger="spinharm.hydrogen"):
            rep = hamiltonian_residual(s, points=pts)
        assert rep.skipped_points == 1 and rep.samples == 1
        assert "skipping" in caplog.text

    def test_report_dict(self):
        d = hamiltonian_residual(make_state("1/2", "1/2"), 5, 0).to_dict(per_point=True)
        assert len(d["per_point"]) == 5 and set(d["units"]) == {"hbar", "mu", "q"}


class TestRadial:
    @pytest.mark.parametrize("j", ["1/2", "5/2"])
    def test_agrees(self, j):
        assert radial_check(j).passed

    def test_wrong_decay(self):
        rep = radial_check("5/2", decay=1.0)
        assert not rep.passed and rep.max_rel_err > 1e-2


class TestPsi:
    @pytest.mark.parametrize("j", [0, 1, 2, 3])
    def test_integer_j(self, j):
        assert psi_independence(j, 30, 0).max_rel_correction < 1e-10

    def test_half_integer_j_does_depend_on_psi(self):
        assert psi_independence("1/2", 30, 0).max_rel_correction > 1e-2

    def test_spectral_derivative_exact(self, rng):
        # d^2/dpsi^2 of e^{i psi/2} cos(phi) is -1/4 of itself
        pts = EulerPoint(np.ones(5), rng.uniform(0.3, 2.8, 5), rng.uniform(0, 6, 5), rng.uniform(0, 12, 5))
        fld = lambda r, t, p, s: np.exp(0.5j * s) * np.cos(p) + 0 * r * t
        f, dps, dpp, dmix = hydrogen._spectral_angles(fld, pts, 16)
        assert np.allclose(dpp, -0.25 * f, atol=1e-13)
        assert np.allclose(dmix, -0.5j * np.exp(0.5j * pts.psi) * np.sin(pts.phi), atol=1e-13)


def test_ladder_passes_radial_factor():
    assert hydrogen.ladder_radial_commutation("3/2", 50, 0) < 1e-5


def test_lz_eigenvalue():
    assert hydrogen.lz_eigenvalue_error(make_state("5/2", "-3/2"), 50, 0) < 1e-6
