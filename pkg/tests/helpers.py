"""Shared hypothesis strategies and the sympy oracle bridge."""
from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from spinharm.poly import Polynomial
from spinharm.scalar import GaussianRational

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussian_rationals = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussian = gaussian_rationals.filter(lambda g: bool(g))

monomials = st.tuples(*[st.integers(0, 2)] * 4)
polynomials = st.dictionaries(monomials, gaussian_rationals, max_size=4).map(Polynomial)

# the four variables as independent sympy symbols (w = conjugate partner)
SYMS = sp.symbols("z1 z2 w1 w2")


def to_sympy(p: Polynomial):
    expr = sp.Integer(0)
    for (a, b, c, d), k in p.items():
        coef = sp.Rational(k.re.numerator, k.re.denominator) + sp.I * sp.Rational(k.im.numerator, k.im.denominator)
        expr += coef * SYMS[0] ** a * SYMS[1] ** b * SYMS[2] ** c * SYMS[3] ** d
    return sp.expand(expr)


def from_sympy(expr) -> Polynomial:
    poly = sp.Poly(sp.expand(expr), *SYMS)
    out = {}
    for mono, c in poly.terms():
        re, im = sp.re(c), sp.im(c)
        out[mono] = GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    return Polynomial(out)
