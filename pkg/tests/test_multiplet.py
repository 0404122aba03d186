import csv
import io
import json
from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from spinharm.coords import euler_to_c2
from spinharm.multiplet import (
    Annihilated,
    HalfInt,
    Ket,
    half_step,
    highest_weight,
    inner_product,
    ladder,
    ladder_coefficient,
    lowest_weight,
    m_values,
    multiplet,
    multiplet_to_csv,
    multiplet_to_json,
    multiplet_to_latex,
    norm_squared,
    polynomial_latex,
    proportionality,
    verify_ket,
    weights,
)
from spinharm.poly import ONE, Z1, Z1B, Z2, Z2B, Polynomial
from spinharm.scalar import RadicalScalar as R

SMALL_J = [HalfInt(t) for t in range(7)]  # 0 .. 3


def quad_moment(a: int, b: int) -> complex:
    """<z^a zbar^b> under exp(-|z|^2/2) by 2-D quadrature in polar coordinates."""

    def part(fn):
        num, _ = integrate.dblquad(
            lambda rho, t: fn(rho ** (a + b) * np.exp(1j * (a - b) * t)) * rho * np.exp(-rho * rho / 2),
            0, 2 * np.pi, 0, 40, epsabs=1e-13, epsrel=1e-12,
        )
        return num

    norm = 2 * np.pi
    return complex(part(np.real), part(np.imag)) / norm


class TestHalfInt:
    @pytest.mark.parametrize("text,twice", [("3/2", 3), ("1.5", 3), (2, 4), ("-1/2", -1), (Fraction(5, 2), 5)])
    def test_parse(self, text, twice):
        assert HalfInt.parse(text).twice == twice

    @pytest.mark.parametrize("bad", ["1/3", "x", "", 0.25])
    def test_reject(self, bad):
        with pytest.raises(ValueError):
            HalfInt.parse(bad)

    def test_str(self):
        assert str(HalfInt(3)) == "3/2" and str(HalfInt(4)) == "2" and str(HalfInt(-1)) == "-1/2"

    def test_m_values(self):
        assert [str(m) for m in m_values("3/2")] == ["3/2", "1/2", "-1/2", "-3/2"]


class TestExamples:
    def test_highest(self):
        assert highest_weight(0).body == ONE
        assert highest_weight(1).body == Z1 * Z2B
        assert highest_weight("3/2").body == Z1**2 * Z2B

    def test_lowest(self):
        assert lowest_weight("1/2").body == Z2
        assert lowest_weight(1).body == Z1B * Z2
        assert lowest_weight("5/2").body == Z2 * (Z1B * Z2) ** 2

    def test_ladder(self):
        k = ladder(lowest_weight(1), "raise")
        assert k.body == Z1 * Z1B - Z2 * Z2B
        assert k.norm_factor == R(1, 2)
        k = ladder(lowest_weight("1/2"), "raise")
        assert k.body == Z1 and k.norm_factor == R(1, 1)
        assert isinstance(ladder(highest_weight(1), "raise"), Annihilated)

    def test_multiplet_from_bottom(self):
        bodies = [k.body for k in multiplet(1, "from_bottom")]
        assert bodies == [(Z1 * Z2B).scale(-2), Z1 * Z1B - Z2 * Z2B, Z1B * Z2]

    def test_half_multiplet_normalized(self):
        kets = multiplet("1/2").kets
        assert [k.body for k in kets] == [Z1, Z2]
        assert all(k.norm_factor == R(1, 1) for k in kets)

    def test_trivial(self):
        assert [k.body for k in multiplet(0)] == [ONE]

    def test_half_step(self):
        assert half_step(lowest_weight("1/2"), "J1pm") == Z1B * Z2
        assert half_step(highest_weight("1/2"), "J2pp") == Z1 * Z2B
        assert half_step(highest_weight(0), "J1pp") == Z1
        with pytest.raises(ValueError):
            half_step(highest_weight(0), "Lplus")

    def test_inner_product(self):
        assert inner_product(ONE, ONE) == 1
        assert inner_product(Z1, Z1) == 2
        assert inner_product(Z1, Z2) == 0

    def test_verify(self):
        assert verify_ket(highest_weight(1)).passed
        assert all(verify_ket(k).passed for k in multiplet("5/2"))
        bad = verify_ket(Ket(HalfInt(0), HalfInt(0), Z1 * Z1B))
        assert not bad.checks["harmonic"]

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            multiplet(-1)
        with pytest.raises(ValueError):
            multiplet(1, "sideways")


@pytest.mark.parametrize("j", SMALL_J, ids=str)
def test_multiplet_structure(j):
    top, bottom = multiplet(j, "from_top"), multiplet(j, "from_bottom")
    assert len(top) == j.twice + 1
    for a, b in zip(top, bottom):
        assert a.m == b.m
        assert verify_ket(a).passed and verify_ket(b).passed
        assert weights(a.body) == (j, a.m)
        assert proportionality(a.body, b.body) is not None
    for a, b in zip(top.kets, top.kets[1:]):
        c = ladder_coefficient(a.j, a.m, "lower")
        assert b.norm_factor == a.norm_factor * c
        # L_+ is the adjoint of L_- under the Gaussian inner product
        assert norm_squared(b.body) == c.square() * norm_squared(a.body)


def test_ladder_coefficients_frozen():
    assert ladder_coefficient(1, 0, "raise") == R(1, 2)
    assert ladder_coefficient("3/2", "1/2", "lower") == R(2, 1)
    assert ladder_coefficient("3/2", "3/2", "raise").is_zero()


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (1, 0), (2, 1), (3, 1)])
def test_moment_rule_against_quadrature(a, b):
    exact = inner_product(Polynomial.monomial((a, 0, 0, 0)), Polynomial.monomial((b, 0, 0, 0)))
    assert complex(exact) == pytest.approx(quad_moment(a, b), abs=1e-8 * max(1, abs(complex(exact))))
    assert complex(exact) == (2**a * factorial(a) if a == b else 0)


def test_orthogonality_small():
    kets = [k for j in SMALL_J[:5] for k in multiplet(j)]
    for i, a in enumerate(kets):
        for b in kets[i + 1:]:
            assert inner_product(a.body, b.body) == 0


@given(st.sampled_from(SMALL_J[1:5]), st.integers(0, 2**32 - 1))
def test_norm_is_additive_over_multiplet(j, seed):
    rng = np.random.default_rng(seed)
    kets = multiplet(j).kets
    c = rng.integers(-3, 4, size=len(kets))
    p = Polynomial()
    for k, ck in zip(kets, c):
        p = p + k.body.scale(int(ck))
    expected = sum(int(ck) ** 2 * norm_squared(k.body) for k, ck in zip(kets, c))
    assert norm_squared(p) == expected


def test_j1_condon_shortley_form():
    # the sign pattern consistent with positive ladder coefficients
    rng = np.random.default_rng(3)
    r, th, ph, ps = rng.uniform(0.5, 2, 100), rng.uniform(0.1, 3.0, 100), rng.uniform(0, 2 * np.pi, 100), rng.uniform(0, 4 * np.pi, 100)
    z1, z2 = euler_to_c2(r, th, ph, ps)
    got = [k.evaluate(z1, z2) for k in multiplet(1, "from_bottom")]
    want = [-r / 2 * np.exp(1j * ph) * np.sin(th), r / np.sqrt(2) * np.cos(th), r / 2 * np.exp(-1j * ph) * np.sin(th)]
    for g, w in zip(got, want):
        assert np.max(np.abs(g - w)) < 1e-12


class TestExports:
    def test_json(self):
        doc = json.loads(multiplet_to_json(multiplet(1), normalized=True))
        assert doc["j"] == "1" and len(doc["kets"]) == 3
        assert doc["kets"][1]["scale"] == str(R(1, 2).inverse())
        assert Polynomial.from_json_terms(doc["kets"][0]["body"]) == Z1 * Z2B

    def test_json_deterministic(self):
        assert multiplet_to_json(multiplet("5/2")) == multiplet_to_json(multiplet("5/2"))

    def test_csv(self):
        rows = list(csv.DictReader(io.StringIO(multiplet_to_csv(multiplet(1)))))
        assert len(rows) == 1 + 2 + 1
        assert rows[0]["m"] == "1" and rows[0]["exp_z1"] == "1" and rows[0]["exp_z2b"] == "1"

    def test_latex(self):
        tex = multiplet_to_latex(multiplet("1/2"))
        assert "\\begin{align*}" in tex and "\\cos\\tfrac{\\theta}{2}" in tex
        assert "e^{-i\\phi}" in multiplet_to_latex(multiplet(1))
        assert polynomial_latex(Z1 * Z2B - Z1B * Z2) == "z_1 \\bar z_2 - z_2 \\bar z_1"
