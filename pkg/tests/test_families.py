from fractions import Fraction as F

import pytest
import sympy

from realzeros.algebra import (
    DomainError,
    Poly,
    count_real_roots,
    count_roots_between,
    squarefree_part,
)
from realzeros.families import (
    Family,
    FamilySpec,
    apply_frame,
    build_bessel_truncation,
    build_canonical,
    build_f2,
    build_f2_by_differentiation,
    build_f3,
    build_f3_by_substitution,
    build_f4,
    build_power,
    f2_coefficients,
    factorial,
    hn,
    hn_by_differentiation,
    hn_coefficients,
    hn_coeffs,
)
from realzeros.ratfun import RatFun, f_over_fpp

z = Poly.x()
Z = RatFun.z()
w = sympy.Symbol("w")
x = sympy.Symbol("x")


def sympy_coeffs(expr, var):
    return [F(int(c.p), int(c.q)) for c in reversed(sympy.Poly(expr, var).all_coeffs())]


# --- H_n -----------------------------------------------------------------------

@pytest.mark.parametrize("n, expected", [
    (1, 2 * z),
    (2, -12 * z + 12 * z**2),
    (3, 96 * z - 240 * z**2 + 120 * z**3),
])
def test_hn_coeffs_examples(n, expected):
    assert hn_coeffs(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 2 * z + 2), (2, 12 * z**2 + 12 * z)])
def test_hn_by_differentiation_examples(n, expected):
    assert hn_by_differentiation(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 7, 20])
def test_hn_against_sympy(n):
    oracle = sympy.diff((w - 1) ** (n - 1) * (w + 1) ** (n + 1), w, n)
    assert hn_by_differentiation(n).coeffs == tuple(sympy_coeffs(oracle, w))
    assert hn(n) == hn_by_differentiation(n)


def test_hn_dual_route_up_to_25():
    for n in range(1, 26):
        assert hn_coeffs(n).compose_affine(1, 1) == hn_by_differentiation(n)


def test_hn_b_recurrence():
    for n in range(1, 26):
        b = hn_coefficients(n)
        assert b[0] != 0
        for k in range(n - 1):
            assert F(b[k + 1], b[k]) == F((k + 1 - n) * (k + 2 + n), 2 * (k + 1) * (k + 2))


def test_hn_ode_residual_up_to_50():
    for n in range(1, 51):
        h = hn(n)
        res = (1 - z**2) * h.derivative(2) - 2 * (z + 1) * h.derivative() + n * (n + 1) * h
        assert res.is_zero()


def test_hn_roots_simple_in_unit_interval():
    for n in range(1, 101):
        h = hn(n)
        assert h.degree == n
        assert h(-1) == 0
        assert squarefree_part(h) == h.monic()
        assert count_roots_between(h, -1, 1, lo_closed=True, hi_closed=False) == n


def test_hn_rejects_nonpositive():
    for fn in (hn_coeffs, hn_by_differentiation):
        with pytest.raises(DomainError):
            fn(0)


def test_factorial_memo():
    assert factorial(201) == sympy.factorial(201)
    assert factorial.cache_info().currsize > 0


# --- F2 -------------------------------------------------------------------------

def test_f2_examples():
    assert build_f2(2) == z**2 - z
    # d/dz (z^2 (z-1)^2) = 2z(z-1)(2z-1)
    assert build_f2(3) == 4 * z**3 - 6 * z**2 + 2 * z == 2 * z * (z - 1) * (2 * z - 1)
    f = build_f2(3)
    assert (z * (z - 1) * f.derivative(2) - 6 * f).is_zero()


def test_f2_dual_route_and_recurrence():
    for n in range(2, 26):
        assert build_f2(n) == build_f2_by_differentiation(n)
        a = f2_coefficients(n)
        for k in range(n - 1):
            assert F(a[k + 1], a[k]) == F(-(k + n) * (n - 1 - k), (k + 1) * (k + 2))


def test_f2_zero_at_origin_simple():
    for n in range(2, 12):
        p = build_f2(n)
        assert p.degree == n and p(0) == 0 and p.derivative()(0) != 0


def test_f2_roots_in_unit_interval():
    for n in range(2, 51):
        for p in (build_f2(n), build_f2(n).derivative()):
            k = squarefree_part(p).degree
            assert count_real_roots(p) == k
            assert count_roots_between(p, 0, 1, lo_closed=True) == k


def test_f2_rejects_small_n():
    with pytest.raises(DomainError):
        build_f2(1)


# --- F3 -------------------------------------------------------------------------

def test_f3_table_examples():
    assert build_f3(1, 2) == 8 * (Z - 1) * (Z - 2) / Z
    assert build_f3(2, 2) == 144 * (Z - 1) * (Z - F(4, 3)) * (Z - 2) / Z**2
    assert build_f3(2, -1) == -12 * (Z**2 - 1) / Z**2


@pytest.mark.parametrize("n, K", [(1, 2), (3, F(3, 2)), (4, -1), (5, F(1, 3)), (6, 7)])
def test_f3_against_sympy_substitution(n, K):
    Ks = sympy.Rational(K.numerator, K.denominator) if isinstance(K, F) else sympy.Integer(K)
    H = sympy.diff((w - 1) ** (n - 1) * (w + 1) ** (n + 1), w, n)
    expr = sympy.cancel((x - Ks) * H.subs(w, (Ks + 1) / (Ks - 1) - 2 * Ks / ((Ks - 1) * x)))
    num, den = sympy.fraction(expr)
    f = build_f3(n, K)
    lead = sympy.Poly(den, x).LC()
    assert f.num.coeffs == tuple(sympy_coeffs(sympy.expand(num / lead), x))
    assert f.den.coeffs == tuple(sympy_coeffs(sympy.expand(den / lead), x))


def test_f3_two_routes_agree():
    for n in range(1, 9):
        for K in (2, F(3, 2), 7, -1, F(1, 3), -2):
            assert build_f3(n, K) == build_f3_by_substitution(n, K)


def test_f3_shape():
    for n in range(1, 12):
        for K in (2, F(3, 2), 7, -1, F(1, 3), -2):
            f = build_f3(n, K)
            assert f.den == Poly.monomial(n)
            assert f.num(0) != 0
            assert f.num(1) == 0 and f.num(K) == 0
            assert f.num.degree in (n, n + 1)


def test_f3_invalid():
    for bad in ((1, 0), (1, 1), (0, 2)):
        with pytest.raises(DomainError):
            build_f3(*bad)


def test_f3_limit_is_f4():
    for n in range(1, 11):
        f4 = build_f4(n)
        a = build_f3(n, 10**3).num.scale(F(-1, 10**3))
        c = 2 * 10**3 * max(abs(u - v) for u, v in
                            zip(a.coeffs, f4.num.coeffs + (F(0),) * 2))
        K = 10**6
        scaled = build_f3(n, K).num.scale(F(-1, K))
        diffs = [abs(scaled[k] - f4.num[k]) for k in range(n + 2)]
        assert max(diffs) <= c / K


# --- F4 -------------------------------------------------------------------------

def test_f4_table_examples():
    assert build_f4(1) == 4 * (Z - 1) / Z
    assert build_f4(2) == 24 * (Z - 1) * (Z - 2) / Z**2
    assert build_f4(3) == 192 * (Z - 1) * (Z**2 - 5 * Z + 5) / Z**3


def test_f4_shape():
    for n in range(1, 15):
        f = build_f4(n)
        assert f.den == Poly.monomial(n) and f.num(0) != 0
        assert f.num(1) == 0 and f.num.derivative()(1) != 0


# --- Bessel truncation, powers, frames -----------------------------------------

def test_bessel_truncation_examples():
    assert build_bessel_truncation(2) == z + z**2 / 2 + z**3 / 12
    assert build_bessel_truncation(1) == z + z**2 / 2
    t = build_bessel_truncation(5)
    assert z * t.derivative(2) - t == Poly.monomial(6, F(-1, factorial(5) * factorial(6)))
    with pytest.raises(DomainError):
        build_bessel_truncation(0)


def test_power_examples():
    assert build_power(3) == RatFun(z**3)
    assert build_power(-2) == 1 / Z**2
    f = build_power(2)
    assert f.derivative(2) * Z**2 == 2 * f
    for bad in (0, 1):
        with pytest.raises(DomainError):
            build_power(bad)


def test_apply_frame_examples():
    assert apply_frame(Z**2, (1, 1, 0)) == Z**2
    assert apply_frame(Z**2, (3, 2, 1)) == 3 * (2 * Z + 1) ** 2
    g1 = build_f3(1, 2)
    assert apply_frame(g1, (1, 1, -1)) == 8 * (Z - 2) * (Z - 3) / (Z - 1)
    assert apply_frame(g1, (1, 1, 1)) == 8 * Z * (Z - 1) / (Z + 1)
    with pytest.raises(DomainError):
        apply_frame(g1, (0, 1, 0))
    with pytest.raises(DomainError):
        apply_frame(g1, (1, 0, 0))


def test_family_spec_validation():
    with pytest.raises(DomainError):
        FamilySpec(Family.F2, n=1)
    with pytest.raises(DomainError):
        FamilySpec(Family.F3, n=2, K=1)
    with pytest.raises(DomainError):
        FamilySpec(Family.POWER, Q=0)
    with pytest.raises(DomainError):
        FamilySpec(Family.F4, n=2, frame=(1, 0, 0))
    spec = FamilySpec(Family.F3, n=2, K=2, frame=(2, 3, 1))
    assert spec.build() == apply_frame(build_f3(2, 2), (2, 3, 1))


@pytest.mark.parametrize("tag", [Family.SIN, Family.EXP, Family.TAN])
def test_catalog_only_tags(tag):
    with pytest.raises(DomainError):
        build_canonical(FamilySpec(tag))


def test_s_degree_for_family_members():
    cases = [build_power(q) for q in (-3, 2, 5)]
    cases += [RatFun(build_f2(n)) for n in (2, 5)]
    cases += [build_f3(n, K) for n in (1, 4) for K in (2, -1)]
    cases += [build_f4(n) for n in (1, 4)]
    for f in cases:
        assert f_over_fpp(f).degree in (2, 3, 4)
