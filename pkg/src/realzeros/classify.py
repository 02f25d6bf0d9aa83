"""Recover the canonical family and affine frame of a rational function.

The decision is driven by the polynomial ``S = f/f''``: its degree and root
multiplicities select a candidate family, the roots of ``S`` pin down the
affine change of variable, and every candidate is accepted only after exact
coefficientwise equality with the framed canonical member.

Frames follow the constructor convention: a match with frame
``(a1, a2, a3)`` means ``f(z) == a1 * g(a2*z + a3)`` for the canonical ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .algebra import DomainError, Number, Poly, _frac, poly_divmod, poly_gcd
from .families import Family, FamilySpec, apply_frame, build_canonical
from .ratfun import HypothesisViolated, RatFun, compute_m, f_over_fpp, pole_order
from .verify import HypothesisReport, check_hypotheses

MATCH = "MATCH"
NO_MATCH = "NO_MATCH"
NO_MATCH_IRRATIONAL = "NO_MATCH-IRRATIONAL"


@dataclass(frozen=True)
class FamilyMatch:
    status: str
    spec: FamilySpec | None
    m: int
    S: Poly | None
    exact: bool
    reason: str = ""
    ode_constant: Fraction | None = None
    hypotheses: HypothesisReport | None = None

    @property
    def matched(self) -> bool:
        return self.status == MATCH


def canonicalize_K(K: Number) -> Fraction:
    K = _frac(K)
    if K in (0, 1):
        raise DomainError("K must not be 0 or 1")
    return K if abs(K) >= 1 else 1 / K


def recover_frame(inp: RatFun, canonical: RatFun, alpha2: Number, alpha3: Number):
    """Scale ``alpha1`` with ``inp == alpha1 * canonical(alpha2*z + alpha3)``, or None."""
    if canonical.is_zero():
        raise DomainError("canonical function is identically zero")
    h = apply_frame(canonical, (1, alpha2, alpha3))
    if h.den != inp.den or h.num.degree != inp.num.degree:
        return None
    a1 = inp.num.lc / h.num.lc
    if a1 == 0 or inp.num[0] != a1 * h.num[0]:
        return None
    if h.num.scale(a1) != inp.num:
        return None
    return a1


def _quadratic_roots(q: Poly):
    """Exact rational roots of a quadratic: ``(roots, status)``."""
    c, b, a = q.coeffs
    disc = b * b - 4 * a * c
    if disc < 0:
        return None, "S has non-real roots"
    num, den = disc.numerator, disc.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None, NO_MATCH_IRRATIONAL
    sq = Fraction(rn, rd)
    return sorted([(-b - sq) / (2 * a), (-b + sq) / (2 * a)]), ""


def _linear_root(p: Poly) -> Fraction:
    return -p[0] / p[1]


def _structure(S: Poly):
    """``(double_root or None, simple_roots, problem)`` for ``2 <= deg S <= 4``."""
    g = poly_gcd(S, S.derivative())
    if g.degree == 0:
        if S.degree != 2:
            return None, [], f"S of degree {S.degree} has no repeated root"
        roots, problem = _quadratic_roots(S)
        return None, roots or [], problem
    if g.degree != 1:
        return None, [], "S has a root of multiplicity above 2 or two repeated roots"
    x0 = _linear_root(g)
    rest, r = poly_divmod(S, Poly([-x0, 1]) ** 2)
    assert r.is_zero()
    if rest.degree == 0:
        return x0, [], ""
    if rest.degree == 1:
        return x0, [_linear_root(rest)], ""
    roots, problem = _quadratic_roots(rest)
    return x0, roots or [], problem


def _ode_constant(S: Poly, spec: FamilySpec, a2: Fraction, a3: Fraction):
    """Constant ``c`` making ``S`` the framed ``P/c``, or None if shapes differ."""
    P, _ = spec.ode()
    target = P.compose_affine(a2, a3)
    c = target.lc / (S.lc * a2 * a2)
    if S.scale(c * a2 * a2) != target:
        return None
    return c


def _map_to_unit(x0: Fraction, x1: Fraction):
    """Affine ``t = a2*z + a3`` sending ``x0 -> 0`` and ``x1 -> 1``."""
    a2 = 1 / (x1 - x0)
    return a2, -x0 * a2


def _candidates(f: RatFun, m: int, S: Poly, x0, simple):
    """Yield ``(spec_without_scale, a2, a3)`` triples to try."""
    d = S.degree
    if d == 2 and x0 is not None:
        if m not in (0, 1):
            yield FamilySpec(Family.POWER, Q=m), Fraction(1), -x0
    elif d == 2:
        if f.is_polynomial() and f.num.degree >= 2:
            a, b = simple
            for lo, hi in ((a, b), (b, a)):
                a2, a3 = _map_to_unit(lo, hi)
                yield FamilySpec(Family.F2, n=f.num.degree), a2, a3
    elif d == 3 and x0 is not None and len(simple) == 1:
        n = pole_order(f, x0)
        if n >= 1:
            a2, a3 = _map_to_unit(x0, simple[0])
            yield FamilySpec(Family.F4, n=n), a2, a3
    elif d == 4 and x0 is not None and len(simple) == 2:
        n = pole_order(f, x0)
        if n >= 1:
            r1, r2 = simple
            for one, other in ((r1, r2), (r2, r1)):
                a2, a3 = _map_to_unit(x0, one)
                K = a2 * other + a3
                yield FamilySpec(Family.F3, n=n, K=K), a2, a3


def _preference(spec: FamilySpec):
    k_rank = 0 if spec.K is None or abs(spec.K) >= 1 else 1
    return (k_rank, 0 if spec.frame[1] > 0 else 1)


def classify(f: RatFun, *, with_hypotheses: bool = True) -> FamilyMatch:
    if f.is_constant():
        raise DomainError("cannot classify a constant function")
    hyp = check_hypotheses(f) if with_hypotheses else None
    m = compute_m(f)

    def fail(status, reason, S=None):
        return FamilyMatch(status, None, m, S, False, reason, hypotheses=hyp)

    try:
        S = f_over_fpp(f)
    except HypothesisViolated as exc:
        return fail(NO_MATCH, str(exc))
    if not 2 <= S.degree <= 4:
        return fail(NO_MATCH, f"f/f'' has degree {S.degree}", S)
    x0, simple, problem = _structure(S)
    if problem:
        status = NO_MATCH_IRRATIONAL if problem == NO_MATCH_IRRATIONAL else NO_MATCH
        return fail(status, problem if status == NO_MATCH else "S has irrational roots", S)

    matches = []
    for base, a2, a3 in _candidates(f, m, S, x0, simple):
        c = _ode_constant(S, base, a2, a3)
        expected = base.ode()[1]
        if c is None or c != expected:
            continue
        a1 = recover_frame(f, build_canonical(base), a2, a3)
        if a1 is None:
            continue
        spec = FamilySpec(base.tag, n=base.n, K=base.K, Q=base.Q, frame=(a1, a2, a3))
        assert spec.build() == f
        matches.append((spec, c))
    if not matches:
        return fail(NO_MATCH, "no canonical family reproduces f exactly", S)
    spec, c = min(matches, key=lambda sc: _preference(sc[0]))
    return FamilyMatch(MATCH, spec, m, S, True, "", c, hyp)
