import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from spinharm import coords
from spinharm.coords import (
    DomainError,
    EulerPoint,
    c2_to_euler,
    consistency_sweep,
    euler_apply,
    euler_to_c2,
    hopf_c2,
    hopf_r4,
    monomial_euler,
    polynomial_field,
    random_su2,
    rot_z,
    same_on_double_cover,
    so3_from_su2,
    su2_from_euler,
)
from spinharm.multiplet import multiplet
from spinharm.poly import Z1, Z1B, Z2, poly_eval
from spinharm.weyl import generator, weyl_apply

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False)


class TestHopf:
    def test_examples(self):
        assert np.allclose(hopf_r4([1, 0, 0, 0]), [0, 0, 1])
        assert np.allclose(hopf_r4([0, 0, 1, 0]), [0, 0, -1])

    @given(arrays(float, 4, elements=finite))
    def test_norm_squares(self, u):
        assert np.linalg.norm(hopf_r4(u)) == pytest.approx(np.dot(u, u), rel=1e-12, abs=1e-12)

    @given(arrays(float, 4, elements=finite))
    def test_c2_form_agrees(self, u):
        assert np.allclose(hopf_r4(u), hopf_c2(*coords.r4_to_c2(u)), atol=1e-12)

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            hopf_r4([1, 2, 3])

    def test_equivariance(self, rng):
        for _ in range(50):
            A = random_su2(rng)
            z = rng.normal(size=2) + 1j * rng.normal(size=2)
            assert np.allclose(hopf_c2(*(np.conj(A) @ z)), so3_from_su2(A) @ hopf_c2(*z), atol=1e-12)


class TestEuler:
    def test_near_pole(self):
        z1, z2 = euler_to_c2(1, 1e-9, 0, 0)
        assert abs(z1 - 1) < 1e-12 and abs(z2) < 1e-9

    def test_equator_frozen(self):
        z1, z2 = euler_to_c2(4, np.pi / 2, 0, 0)
        assert z1 == pytest.approx(np.sqrt(2)) and z2 == pytest.approx(np.sqrt(2))

    def test_inverse_frozen(self):
        p, pole = c2_to_euler(np.sqrt(2), np.sqrt(2))
        assert not pole
        assert np.allclose(p, (4, np.pi / 2, 0, 0), atol=1e-12)

    def test_pole(self):
        p, pole = c2_to_euler(1, 0)
        assert pole and p.r == 1 and p.theta == 0 and (p.phi + p.psi) % (4 * np.pi) == 0

    def test_origin_rejected(self):
        with pytest.raises(DomainError):
            c2_to_euler(0, 0)
        with pytest.raises(DomainError):
            euler_to_c2(0, 1, 0, 0)

    @given(st.floats(0.1, 10), st.floats(0.01, np.pi - 0.01), st.floats(-10, 10), st.floats(-20, 20))
    def test_hopf_of_euler_is_spherical(self, r, th, ph, ps):
        x = hopf_c2(*euler_to_c2(r, th, ph, ps))
        want = (r * np.sin(th) * np.cos(ph), r * np.sin(th) * np.sin(ph), r * np.cos(th))
        assert np.allclose(x, want, atol=1e-12 * r)

    @given(st.floats(0.1, 10), st.floats(0.01, np.pi - 0.01), st.floats(0, 2 * np.pi), st.floats(0, 4 * np.pi))
    def test_round_trip(self, r, th, ph, ps):
        p = EulerPoint(r, th, ph, ps)
        back, _ = c2_to_euler(*euler_to_c2(*p))
        assert same_on_double_cover(p, back)
        assert back.r == pytest.approx(r, rel=1e-12) and back.theta == pytest.approx(th, abs=1e-7)

    def test_double_cover(self):
        p = EulerPoint(1.3, 0.7, 0.2, 0.9)
        q = EulerPoint(1.3, 0.7, 0.2, 0.9 + 2 * np.pi)
        assert same_on_double_cover(p, q)
        z, w = np.array(euler_to_c2(*p)), np.array(euler_to_c2(*q))
        assert np.allclose(z, -w)

    def test_monomial_euler(self):
        # z1 zbar2 = (r/2) sin(theta) e^{i phi}
        assert monomial_euler((1, 0, 0, 1)) == (1, 1, 1, 1, 0)


class TestSU2:
    def test_identity(self):
        assert np.allclose(so3_from_su2(np.eye(2)), np.eye(3))

    def test_diag_rotation(self):
        a = 0.37
        assert np.allclose(so3_from_su2(np.diag([np.exp(-1j * a), np.exp(1j * a)])), rot_z(2 * a), atol=1e-14)

    def test_homomorphism_and_cover(self, rng):
        for _ in range(100):
            A, B = random_su2(rng), random_su2(rng)
            RA = so3_from_su2(A)
            assert np.allclose(so3_from_su2(A @ B), RA @ so3_from_su2(B), atol=1e-12)
            assert np.allclose(so3_from_su2(-A), RA, atol=1e-12)
            assert np.allclose(RA @ RA.T, np.eye(3), atol=1e-12) and np.linalg.det(RA) == pytest.approx(1)

    def test_rejects_non_unitary(self):
        with pytest.raises(DomainError):
            so3_from_su2(np.array([[2, 0], [0, 0.5]]))

    def test_su2_from_euler_is_su2(self):
        assert coords.is_su2(su2_from_euler(0.4, 1.1, 2.9))


class TestEulerApply:
    P = EulerPoint(1.2, 0.9, 0.4, 1.7)

    def test_lz_on_half(self):
        f = polynomial_field(Z1)
        assert euler_apply("Lz", f, self.P) == pytest.approx(0.5 * f(*self.P), rel=1e-6)

    def test_lplus_on_bottom(self):
        body = Z1B * Z2
        got = euler_apply("Lplus", polynomial_field(body), self.P)
        want = poly_eval(weyl_apply(generator("Lplus"), body), *euler_to_c2(*self.P))
        assert abs(got - want) <= 1e-6 * abs(want)

    def test_euler_on_r2(self):
        f = lambda r, t, p, s: r**2
        assert euler_apply("L", f, self.P) == pytest.approx(2 * self.P.r**2, rel=1e-8)

    @pytest.mark.parametrize("tag", [t.value for t in coords.EULER_TAGS if t.value not in ("Casimir",)])
    def test_constant_field(self, tag):
        f = lambda r, t, p, s: np.ones_like(np.asarray(r, dtype=float)) * 3.0
        assert abs(euler_apply(tag, f, self.P)) < 1e-8

    def test_casimir_eigenvalue(self):
        for k in multiplet(2):
            f = polynomial_field(k.body)
            assert abs(euler_apply("Casimir", f, self.P) - 6 * f(*self.P)) < 1e-5 * max(1, abs(f(*self.P)))

    def test_pole_rejected(self):
        with pytest.raises(DomainError):
            euler_apply("Lz", polynomial_field(Z1), EulerPoint(1, 1e-5, 0, 0))

    def test_no_euler_form(self):
        with pytest.raises(ValueError):
            euler_apply("Delta", polynomial_field(Z1), self.P)


def test_sweep_small():
    entries = consistency_sweep(j_max=1, samples=40, seed=1)
    assert len(entries) == 3 * len(coords.EULER_TAGS)
    assert max(e.max_rel_err for e in entries) < 1e-6


@pytest.mark.parametrize("tag", ["Lminus", "Casimir"])
def test_printed_forms_disagree(tag):
    # the typeset L- (missing sign) and short-form Casimir are not the exact operators
    worst = max(e.max_rel_err for e in consistency_sweep(j_max=1, samples=40, seed=1, tags=[tag], variant="printed"))
    assert worst > 1e-2
