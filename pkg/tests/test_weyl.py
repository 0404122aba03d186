import pytest
import sympy as sp
from hypothesis import given, strategies as st

from spinharm.poly import ONE, Z1, Z1B, Z2, Z2B, Polynomial, VarId
from spinharm.scalar import GaussianRational as G
from spinharm.weyl import (
    GeneratorTag,
    WeylOperator,
    commutator,
    express_in_span,
    generator,
    span_rank,
    weyl_apply,
    weyl_bracket,
    weyl_compose,
)

from helpers import SYMS, from_sympy, polynomials, to_sympy

z1, z2, w1, w2 = SYMS
half = sp.Rational(1, 2)

# the generators written directly with sympy derivatives
SYMPY_OPS = {
    "L": lambda f: half * (z1 * f.diff(z1) + z2 * f.diff(z2) + w1 * f.diff(w1) + w2 * f.diff(w2)),
    "Lz": lambda f: half * (z1 * f.diff(z1) - z2 * f.diff(z2) - w1 * f.diff(w1) + w2 * f.diff(w2)),
    "Lplus": lambda f: z1 * f.diff(z2) - w2 * f.diff(w1),
    "Lminus": lambda f: z2 * f.diff(z1) - w1 * f.diff(w2),
    "Delta": lambda f: f.diff(z1, w1) + f.diff(z2, w2),
    "J1pp": lambda f: z1 * f,
    "J1pm": lambda f: w1 * f,
    "J1mp": lambda f: f.diff(z2),
    "J1mm": lambda f: f.diff(z1),
    "J2pp": lambda f: w2 * f,
    "J2pm": lambda f: z2 * f,
    "J2mp": lambda f: f.diff(w1),
    "J2mm": lambda f: f.diff(w2),
}


def _lx(f):
    return half * (SYMPY_OPS["Lplus"](f) + SYMPY_OPS["Lminus"](f))


def _ly(f):
    return (SYMPY_OPS["Lplus"](f) - SYMPY_OPS["Lminus"](f)) / (2 * sp.I)


SYMPY_OPS["Lx"] = _lx
SYMPY_OPS["Ly"] = _ly
SYMPY_OPS["Casimir"] = lambda f: sp.expand(
    _lx(sp.expand(_lx(f))) + _ly(sp.expand(_ly(f))) + SYMPY_OPS["Lz"](sp.expand(SYMPY_OPS["Lz"](f)))
)


deriv_indices = st.tuples(*[st.integers(0, 2)] * 4)
operators = st.dictionaries(deriv_indices, polynomials, max_size=3).map(WeylOperator)
_linear = st.dictionaries(st.tuples(*[st.integers(0, 1)] * 4), st.integers(-3, 3), max_size=3).map(Polynomial)
small_operators = st.dictionaries(st.tuples(*[st.integers(0, 1)] * 4), _linear, max_size=2).map(WeylOperator)


class TestExamples:
    def test_lminus_z1(self):
        assert weyl_apply(generator("Lminus"), Z1) == Z2

    def test_euler_on_z1b_z2(self):
        assert weyl_apply(generator("L"), Z1B * Z2) == Z1B * Z2

    def test_delta_kills_unmatched(self):
        assert weyl_apply(generator("Delta"), Z1 * Z2B).is_zero()

    def test_ccr(self):
        d1 = WeylOperator.d(VarId.Z1)
        m = WeylOperator.mul(Z1)
        assert weyl_compose(d1, m) == m * d1 + WeylOperator.identity()
        assert weyl_compose(m, d1) == WeylOperator({(1, 0, 0, 0): Z1})

    def test_gl2_brackets(self):
        lz, lp, lm = (generator(t) for t in ("Lz", "Lplus", "Lminus"))
        assert weyl_bracket(lz, lp, "commutator") == lp
        assert weyl_bracket(lp, lm, "commutator") == lz.scale(2)

    def test_lplus_j2pm(self):
        assert commutator(generator("Lplus"), generator("J2pm")) == generator("J1pp")

    def test_lplus_chain(self):
        lp = generator("Lplus")
        assert weyl_apply(lp, Z1B * Z2) == Z1 * Z1B - Z2 * Z2B
        assert weyl_apply(lp, Z1 * Z1B - Z2 * Z2B) == (Z1 * Z2B).scale(-2)

    def test_lz_constant(self):
        assert weyl_apply(generator("Lz"), ONE).is_zero()

    def test_anticommutator(self):
        a, b = generator("J1mm"), generator("J1pp")
        assert weyl_bracket(a, b, "anticommutator") == (a * b + b * a)

    def test_bad_bracket_kind(self):
        with pytest.raises(ValueError):
            weyl_bracket(generator("L"), generator("L"), "jordan")

    @pytest.mark.parametrize(
        "alias,tag",
        [("dz1", "J1mm"), ("dz2", "J1mp"), ("dz1b", "J2mp"), ("dz2b", "J2mm"), ("l+", "Lplus"), ("laplacian", "Delta")],
    )
    def test_aliases(self, alias, tag):
        assert GeneratorTag.parse(alias) is GeneratorTag(tag)

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            GeneratorTag.parse("Lw")


@pytest.mark.parametrize("tag", sorted(SYMPY_OPS))
@given(f=polynomials)
def test_generator_matches_sympy(tag, f):
    assert weyl_apply(generator(tag), f) == from_sympy(SYMPY_OPS[tag](to_sympy(f)))


class TestAlgebra:
    @given(operators, operators, polynomials)
    def test_composition_is_faithful(self, A, B, f):
        assert weyl_apply(A * B, f) == weyl_apply(A, weyl_apply(B, f))

    @given(operators, operators, operators)
    def test_associative(self, A, B, C):
        assert (A * B) * C == A * (B * C)

    @given(small_operators, small_operators, small_operators)
    def test_jacobi(self, A, B, C):
        total = commutator(A, commutator(B, C)) + commutator(B, commutator(C, A)) + commutator(C, commutator(A, B))
        assert total.is_zero()

    @given(operators, operators)
    def test_bracket_antisymmetric(self, A, B):
        assert commutator(A, B) == -commutator(B, A)

    @given(operators)
    def test_json_roundtrip(self, A):
        assert WeylOperator.from_json_terms(A.to_json_terms()) == A


class TestSpan:
    def test_express(self):
        basis = [generator(t) for t in ("Lplus", "Lminus", "Lz")]
        coeffs = express_in_span(generator("Lx"), basis)
        assert coeffs == [G(1, 0) / 2, G(1, 0) / 2, G(0)]

    def test_outside_span(self):
        assert express_in_span(generator("L"), [generator("Lz")]) is None

    def test_rank(self):
        ops = [generator(t) for t in ("Lplus", "Lminus", "Lx", "Ly", "Lz")]
        assert span_rank(ops) == 3
