from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from realzeros.algebra import DomainError, Poly, poly_gcd
from realzeros.ratfun import (
    HypothesisViolated,
    RatFun,
    compute_m,
    f_over_fpp,
    log_derivative,
    ratfun_derivative,
    ratfun_reduce,
)

z = Poly.x()
Z = RatFun.z()
x = sympy.Symbol("x")


def to_sympy(f: RatFun):
    def conv(p):
        return sum(sympy.Rational(c.numerator, c.denominator) * x**k
                   for k, c in enumerate(p.coeffs))
    return conv(f.num) / conv(f.den)


def test_reduce_examples():
    assert ratfun_reduce(z**2 - 1, z - 1) == RatFun(z + 1)
    f = ratfun_reduce(2 * z, Poly.const(2))
    assert f.num == z and f.den == Poly.const(1)
    g = ratfun_reduce(8 * z**2 - 24 * z + 16, z)
    assert g.num == 8 * (z - 1) * (z - 2) and g.den == z


def test_reduce_normalizes_denominator():
    f = ratfun_reduce(z, -3 * z**2 + 3)
    assert f.den.lc == 1
    assert f.num == z.scale(F(-1, 3))
    with pytest.raises(ZeroDivisionError):
        ratfun_reduce(z, Poly())
    assert RatFun(Poly(), z).den == Poly.const(1)


def test_derivative_examples():
    assert ratfun_derivative(1 / Z) == -(1 / Z**2)
    h1 = RatFun(2 * z**2 - 2, z)
    # quotient rule by hand: (4z*z - (2z^2 - 2))/z^2
    assert ratfun_derivative(h1) == RatFun(2 * z**2 + 2, z**2)
    assert ratfun_derivative(RatFun(z * (z - 1))) == RatFun(2 * z - 1)


def test_log_derivative_examples():
    assert log_derivative(Z**3) == 3 / Z
    assert log_derivative(RatFun(z * (z - 1))) == RatFun(2 * z - 1, z**2 - z)
    g1 = RatFun(8 * (z - 1) * (z - 2), z)
    # partial-fraction oracle
    assert log_derivative(g1) == 1 / (Z - 1) + 1 / (Z - 2) - 1 / Z
    with pytest.raises(DomainError):
        log_derivative(RatFun(Poly()))


def test_log_derivative_residues_are_multiplicities():
    f = (Z - 1) ** 3 * (Z + 2) / (Z - 5) ** 2
    L = log_derivative(f)
    for root, mult in ((1, 3), (-2, 1), (5, -2)):
        # residue at a simple pole: num(r) / den'(r)
        assert L.num(root) / L.den.derivative()(root) == mult


def test_f_over_fpp_examples():
    assert f_over_fpp(Z**3) == z**2 / 6
    assert f_over_fpp(RatFun(z**2 - z)) == (z**2 - z) / 2
    g1 = RatFun(8 * (z - 1) * (z - 2), z)
    assert f_over_fpp(g1) == z**2 * (z - 1) * (z - 2) / 4


def test_f_over_fpp_errors():
    with pytest.raises(HypothesisViolated):
        f_over_fpp(RatFun(2 * z + 1))
    with pytest.raises(HypothesisViolated) as exc:
        f_over_fpp(RatFun(z**3 + 1))
    assert exc.value.numerator.degree == 1
    with pytest.raises(DomainError):
        f_over_fpp(RatFun.const(3))


def test_compute_m_examples():
    assert compute_m(Z**5) == 5
    assert compute_m(RatFun(8 * (z - 1) * (z - 2), z)) == 1
    assert compute_m(RatFun(24 * (z - 1) * (z - 2), z**2)) == 0
    with pytest.raises(DomainError):
        compute_m(RatFun.const(2))


def test_arithmetic_against_sympy():
    f = (3 * Z**2 - F(1, 2)) / (Z**3 + 2 * Z - 7)
    g = (Z - 4) / (2 * Z + 1)
    for ours, ref in ((f + g, to_sympy(f) + to_sympy(g)),
                      (f * g, to_sympy(f) * to_sympy(g)),
                      (f / g, to_sympy(f) / to_sympy(g)),
                      (f.derivative(2), sympy.diff(to_sympy(f), x, 2))):
        assert sympy.simplify(to_sympy(ours) - ref) == 0


def test_evaluation():
    f = (Z - 1) / (Z + 1)
    assert f(3) == F(1, 2)
    with pytest.raises(ZeroDivisionError):
        f(-1)


# --- properties --------------------------------------------------------------

coef = st.fractions(min_value=-4, max_value=4, max_denominator=4)
poly_st = st.lists(coef, min_size=1, max_size=4).map(Poly).filter(lambda p: not p.is_zero())
ratfuns = st.builds(RatFun, poly_st, poly_st)
nonconstant = ratfuns.filter(lambda f: not f.is_constant())


@settings(max_examples=150, deadline=None)
@given(ratfuns, ratfuns)
def test_log_derivative_of_product(f, g):
    assert log_derivative(f * g) == log_derivative(f) + log_derivative(g)


@settings(max_examples=150, deadline=None)
@given(ratfuns, ratfuns)
def test_results_reduced(f, g):
    for h in (f + g, f * g, f - g, ratfun_derivative(f)):
        assert h.den.lc == 1
        assert poly_gcd(h.num, h.den) == Poly.const(1) or h.num.is_zero()


@settings(max_examples=150, deadline=None)
@given(nonconstant, nonconstant)
def test_m_additive(f, g):
    fg = f * g
    if fg.is_constant():
        return
    assert compute_m(fg) == compute_m(f) + compute_m(g)
