"""Exact hypothesis checks, ODE residuals, zero locations and the f4 series."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    NEG_INF,
    POS_INF,
    DomainError,
    Number,
    Poly,
    RealRootCertificate,
    _frac,
    certify_all_roots_real,
    count_roots_between,
    squarefree_part,
)
from .families import Family, FamilySpec, build_bessel_truncation, factorial
from .ratfun import RatFun


@dataclass(frozen=True)
class ZeroFreeCheck:
    ok: bool
    numerator: Poly  # reduced numerator of f''/f

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class HypothesisReport:
    f_zeros_real: RealRootCertificate
    f_poles_real: RealRootCertificate
    fprime_zeros_real: RealRootCertificate
    fprime_poles_real: RealRootCertificate
    fpp_over_f_zerofree: ZeroFreeCheck
    # informational, not part of ``overall``
    fpp_zeros_real: RealRootCertificate | None = None
    fpp_poles_real: RealRootCertificate | None = None

    @property
    def overall(self) -> bool:
        return all(
            bool(c)
            for c in (
                self.f_zeros_real,
                self.f_poles_real,
                self.fprime_zeros_real,
                self.fprime_poles_real,
                self.fpp_over_f_zerofree,
            )
        )

    @property
    def fpp_real(self) -> bool:
        return bool(self.fpp_zeros_real) and bool(self.fpp_poles_real)

    def failures(self) -> list[str]:
        names = ("f_zeros_real", "f_poles_real", "fprime_zeros_real",
                 "fprime_poles_real", "fpp_over_f_zerofree")
        return [name for name in names if not getattr(self, name)]


def _certify(p: Poly) -> RealRootCertificate:
    if p.is_zero():
        # f'' identically zero: no zeros to speak of
        return certify_all_roots_real(Poly.const(1))
    return certify_all_roots_real(p)


def check_hypotheses(f: RatFun) -> HypothesisReport:
    """Run every real-rootedness check; failures are reported, never raised."""
    if f.is_constant():
        raise DomainError("hypotheses are undefined for a constant function")
    fp = f.derivative()
    fpp = fp.derivative()
    if fpp.is_zero():
        zero_free = ZeroFreeCheck(False, Poly())
    else:
        ratio = fpp / f
        zero_free = ZeroFreeCheck(ratio.num.degree == 0, ratio.num)
    return HypothesisReport(
        f_zeros_real=_certify(f.num),
        f_poles_real=_certify(f.den),
        fprime_zeros_real=_certify(fp.num),
        fprime_poles_real=_certify(fp.den),
        fpp_over_f_zerofree=zero_free,
        fpp_zeros_real=_certify(fpp.num),
        fpp_poles_real=_certify(fpp.den),
    )


@dataclass(frozen=True)
class OdeIdentity:
    """``coefficient * y'' = constant * y``."""

    coefficient: Poly
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "constant", _frac(self.constant))
        if self.coefficient.is_zero() or self.constant == 0:
            raise DomainError("ODE needs nonzero coefficient and constant")

    @classmethod
    def for_family(cls, spec: FamilySpec) -> "OdeIdentity":
        return cls(*spec.ode())


def ode_residual(f: RatFun | Poly, ode: OdeIdentity) -> RatFun:
    if isinstance(f, Poly):
        f = RatFun(f)
    return f.derivative(2) * ode.coefficient - f * ode.constant


def bessel_truncation_residual(N: int) -> Poly:
    """``z T_N'' - T_N`` for the degree-(N+1) truncation ``T_N``."""
    t = build_bessel_truncation(N)
    return Poly.x() * t.derivative(2) - t


# --- zero locations --------------------------------------------------------

@dataclass(frozen=True)
class LocationCheck:
    label: str
    expected: int
    found: int
    interval: str

    @property
    def ok(self) -> bool:
        return self.expected == self.found


@dataclass
class LocationReport:
    family: Family
    checks: list[LocationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _distinct_degree(p: Poly) -> int:
    return squarefree_part(p).degree


def check_zero_locations(spec: FamilySpec, g: RatFun | Poly) -> LocationReport:
    """Certify the interval containment of zeros claimed for each family.

    ``g`` must be the canonical member (identity frame).
    """
    if isinstance(g, Poly):
        g = RatFun(g)
    report = LocationReport(spec.tag)
    add = report.checks.append
    tag = spec.tag
    if tag is Family.F2:
        if not g.is_polynomial() or g.num.degree != spec.n:
            raise DomainError("instance is not an F2 polynomial of the given n")
        for label, p in (("zeros of g", g.num), ("zeros of g'", g.num.derivative())):
            add(LocationCheck(label, _distinct_degree(p),
                              count_roots_between(p, 0, 1, lo_closed=True), "[0, 1]"))
    elif tag is Family.F3:
        if g.den != Poly.monomial(spec.n):
            raise DomainError("instance is not an F3 function of the given n")
        if spec.K is None or spec.K <= 1:
            raise DomainError("zero locations are only claimed for K > 1")
        p = g.num
        add(LocationCheck("degree of numerator", spec.n + 1, p.degree, "-"))
        add(LocationCheck("zeros of numerator", spec.n + 1,
                          count_roots_between(p, 0, POS_INF), "(0, inf)"))
    elif tag is Family.F4:
        if g.den != Poly.monomial(spec.n):
            raise DomainError("instance is not an F4 function of the given n")
        gp = g.derivative()
        for label, p in (("zeros of g", g.num), ("zeros of g'", gp.num)):
            add(LocationCheck(label, _distinct_degree(p),
                              count_roots_between(p, 1, POS_INF, lo_closed=True), "[1, inf)"))
    elif tag is Family.BESSEL_TRUNC:
        p = g.num
        if not g.is_polynomial():
            raise DomainError("Bessel truncation must be a polynomial")
        real = count_roots_between(p, NEG_INF, POS_INF)
        add(LocationCheck("real zeros of T_N", real,
                          count_roots_between(p, NEG_INF, 0), "(-inf, 0]"))
    else:
        raise DomainError(f"no zero-location claim for {tag.name}")
    return report


# --- the entire function f4 -------------------------------------------------

def _term(x_abs: Fraction, k: int) -> Fraction:
    return x_abs ** (k + 1) / (factorial(k) * factorial(k + 1))


def f4_eval_certified(x: Number, abs_tol: Number) -> tuple[Fraction, Fraction]:
    """Rational enclosure ``[lo, hi]`` of ``f4(x)`` of width at most ``2*abs_tol``.

    Once ``N >= 2|x|`` successive terms shrink by a factor of at least 2, so
    the tail after index ``N`` is below twice the first omitted term.
    """
    x, tol = _frac(x), _frac(abs_tol)
    if tol <= 0:
        raise DomainError("abs_tol must be positive")
    ax = abs(x)
    n = max(1, math.ceil(2 * ax))
    total = sum((x ** (k + 1) / (factorial(k) * factorial(k + 1)) for k in range(n + 1)),
                Fraction(0))
    tail = 2 * _term(ax, n + 1)
    while tail >= tol:
        n += 1
        total += x ** (n + 1) / (factorial(n) * factorial(n + 1))
        tail = 2 * _term(ax, n + 1)
    return total - tail, total + tail


def _f4_sign(x: Fraction, tol: Fraction = Fraction(1, 10**12)) -> int:
    while True:
        lo, hi = f4_eval_certified(x, tol)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if lo == hi == 0:
            return 0
        tol /= 10**6


@dataclass(frozen=True)
class RootSearch:
    intervals: list[tuple[Fraction, Fraction]]
    complete: bool  # False if fewer roots were found than requested
    step: Fraction


def f4_negative_roots(
    search_bound: Number,
    count: int,
    *,
    width: Number = Fraction(1, 10**6),
    min_step: Number = Fraction(1, 2**20),
) -> RootSearch:
    """Bracket the first ``count`` roots of f4 on ``[-search_bound, 0)``.

    Sign changes are sought on a grid, starting at step 1/4 and halving the
    step until enough are found; each bracket is then bisected to ``width``.
    """
    bound, width, min_step = _frac(search_bound), _frac(width), _frac(min_step)
    if bound <= 0:
        raise DomainError("search_bound must be positive")
    step = Fraction(1, 4)
    signs: dict[Fraction, int] = {}

    def sign(x: Fraction) -> int:
        s = signs.get(x)
        if s is None:
            s = signs[x] = _f4_sign(x)
        return s

    while True:
        brackets = []
        k = 1
        prev = -step
        while prev >= -bound and len(brackets) < count:
            cur = max(-(k + 1) * step, -bound)
            if cur == prev:
                break
            if sign(cur) == 0:
                brackets.append((cur, cur))
            elif sign(prev) != sign(cur) and sign(prev) != 0:
                brackets.append((cur, prev))
            prev = cur
            k += 1
        if len(brackets) >= count or step / 2 < min_step:
            break
        step /= 2

    intervals = []
    for lo, hi in brackets[:count]:
        s_lo = sign(lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            s = sign(mid)
            if s == 0:
                lo = hi = mid
                break
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        intervals.append((lo, hi))
    return RootSearch(intervals, len(intervals) >= count, step)
