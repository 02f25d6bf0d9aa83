"""Constructors for the explicit solution families.

Every family below is the canonical representative ``g`` of a class
``alpha1 * g(alpha2*z + alpha3)``.  Where two independent constructions
exist (closed-form coefficients and repeated differentiation) both are
provided so they can be checked against each other.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .algebra import DomainError, Number, Poly, _frac
from .ratfun import RatFun


class Family(enum.Enum):
    POWER = "power"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    BESSEL_TRUNC = "bessel"
    # catalogue-only: no constructor
    SIN = "sin"
    EXP = "exp"
    TAN = "tan"


CATALOG_ONLY = frozenset({Family.SIN, Family.EXP, Family.TAN})

# What the library deliberately does not compute.
OUT_OF_SCOPE = (
    "transcendental forms sin, exp, tan: named tags only, never built or classified",
    "classification of transcendental functions: a proof, not an algorithm",
    "value-distribution machinery behind the classification: characteristic functions, "
    "normal families, factorization of real entire functions",
    "reality of the Bessel-type zeros: checked numerically with certified enclosures, not proved",
)

IDENTITY_FRAME = (Fraction(1), Fraction(1), Fraction(0))


@dataclass(frozen=True)
class FamilySpec:
    """One canonical family, its parameters and an affine frame.

    The frame ``(a1, a2, a3)`` denotes the function ``a1 * g(a2*z + a3)``
    where ``g`` is the canonical member.
    """

    tag: Family
    n: int | None = None
    K: Fraction | None = None
    Q: int | None = None
    terms: int | None = None
    frame: tuple[Fraction, Fraction, Fraction] = IDENTITY_FRAME

    def __post_init__(self):
        a1, a2, a3 = (_frac(a) for a in self.frame)
        object.__setattr__(self, "frame", (a1, a2, a3))
        if a1 == 0 or a2 == 0:
            raise DomainError("frame needs alpha1 != 0 and alpha2 != 0")
        if self.K is not None:
            object.__setattr__(self, "K", _frac(self.K))
        tag = self.tag
        if tag is Family.POWER:
            if self.Q is None or self.Q in (0, 1):
                raise DomainError("POWER needs an integer Q not in {0, 1}")
        elif tag is Family.F2:
            if self.n is None or self.n < 2:
                raise DomainError("F2 needs n >= 2")
        elif tag in (Family.F3, Family.F4):
            if self.n is None or self.n < 1:
                raise DomainError(f"{tag.name} needs n >= 1")
            if tag is Family.F3 and (self.K is None or self.K in (0, 1)):
                raise DomainError("F3 needs K not in {0, 1}")
        elif tag is Family.BESSEL_TRUNC:
            if self.terms is None or self.terms < 1:
                raise DomainError("BESSEL_TRUNC needs terms >= 1")

    def build(self) -> RatFun:
        """Canonical member with the frame applied."""
        return apply_frame(build_canonical(self), self.frame)

    def ode(self):
        """``(P, c)`` such that the canonical member solves ``P y'' = c y``."""
        z = Poly.x()
        if self.tag is Family.POWER:
            return z * z, Fraction(self.Q * (self.Q - 1))
        if self.tag is Family.F2:
            return z * (z - 1), Fraction(self.n * (self.n - 1))
        if self.tag is Family.F3:
            return z * z * (z - 1) * (z - self.K), self.K * self.n * (self.n + 1)
        if self.tag is Family.F4:
            return z * z * (z - 1), Fraction(-self.n * (self.n + 1))
        if self.tag is Family.BESSEL_TRUNC:
            return z, Fraction(1)
        raise DomainError(f"{self.tag.name} has no rational ODE")


@cache
def factorial(k: int) -> int:
    return math.factorial(k)


def hn_coefficients(n: int) -> list[int]:
    """Integers ``b_k`` with ``H_n(w) = sum_k b_k (w+1)^(k+1)``."""
    if n < 1:
        raise DomainError("H_n needs n >= 1")
    f = factorial
    return [
        f(n - 1) * f(n + 1 + k) * (-2) ** (n - 1 - k) // (f(k) * f(n - k - 1) * f(k + 1))
        for k in range(n)
    ]


def hn_coeffs(n: int) -> Poly:
    """``H_n`` in the shifted variable ``u = w + 1`` (so constant term is 0)."""
    return Poly([0] + hn_coefficients(n))


def hn_by_differentiation(n: int) -> Poly:
    """``d^n/dw^n [(w-1)^(n-1) (w+1)^(n+1)]`` in the variable ``w``."""
    if n < 1:
        raise DomainError("H_n needs n >= 1")
    w = Poly.x()
    return ((w - 1) ** (n - 1) * (w + 1) ** (n + 1)).derivative(n)


@cache
def hn(n: int) -> Poly:
    """``H_n(w)`` from the closed form, shifted back to the variable ``w``."""
    return hn_coeffs(n).compose_affine(1, 1)


def f2_coefficients(n: int) -> list[int]:
    """Integers ``a_k`` with ``F_2(z) = sum_k a_k z^(k+1)``."""
    if n < 2:
        raise DomainError("F2 needs n >= 2")
    f = factorial
    return [
        f(n - 1) * f(k + n - 1) * (-1) ** (n - 1 - k) // (f(k) * f(n - 1 - k) * f(k + 1))
        for k in range(n)
    ]


def build_f2(n: int) -> Poly:
    return Poly([0] + f2_coefficients(n))


def build_f2_by_differentiation(n: int) -> Poly:
    if n < 2:
        raise DomainError("F2 needs n >= 2")
    z = Poly.x()
    return (z ** (n - 1) * (z - 1) ** (n - 1)).derivative(n - 2)


def _hn_of_mobius(n: int, a: Fraction, b: Fraction) -> Poly:
    """Numerator of ``H_n(a - b/z)`` over the denominator ``z^n``.

    ``sum_j c_j (a z - b)^j z^(n-j)``.
    """
    h = hn(n)
    lin = Poly([-b, a])
    out = Poly()
    power = Poly.const(1)
    for j in range(n + 1):
        out = out + (power * Poly.monomial(n - j, h[j]))
        power = power * lin
    return out


def build_f3(n: int, K: Number) -> RatFun:
    """``(z - K) H_n((K+1)/(K-1) - 2K/((K-1) z))`` as ``P(z) / z^n``."""
    K = _frac(K)
    if n < 1:
        raise DomainError("F3 needs n >= 1")
    if K in (0, 1):
        raise DomainError("F3 needs K not in {0, 1}")
    a = (K + 1) / (K - 1)
    b = 2 * K / (K - 1)
    num = Poly([-K, 1]) * _hn_of_mobius(n, a, b)
    return RatFun(num, Poly.monomial(n))


def build_f3_by_substitution(n: int, K: Number) -> RatFun:
    """Same function, evaluated through generic rational-function arithmetic."""
    K = _frac(K)
    z = RatFun.z()
    w = (K + 1) / (K - 1) - RatFun.const(2 * K / (K - 1)) / z
    h = hn_by_differentiation(n)
    acc = RatFun.const(0)
    for c in reversed(h.coeffs):
        acc = acc * w + c
    return (z - K) * acc


def build_f4(n: int) -> RatFun:
    """``H_n(1 - 2/z)``."""
    if n < 1:
        raise DomainError("F4 needs n >= 1")
    return RatFun(_hn_of_mobius(n, Fraction(1), Fraction(2)), Poly.monomial(n))


def build_bessel_truncation(N: int) -> Poly:
    """``sum_{k=0}^{N} z^(k+1) / (k! (k+1)!)``."""
    if N < 1:
        raise DomainError("truncation order must be >= 1")
    return Poly([0] + [Fraction(1, factorial(k) * factorial(k + 1)) for k in range(N + 1)])


def build_power(Q: int) -> RatFun:
    if Q in (0, 1):
        raise DomainError("Q must not be 0 or 1")
    if Q > 0:
        return RatFun(Poly.monomial(Q), _reduced=True)
    return RatFun(Poly.const(1), Poly.monomial(-Q), _reduced=True)


def apply_frame(g: RatFun | Poly, frame) -> RatFun:
    """``alpha1 * g(alpha2*z + alpha3)``: substitute first, then scale."""
    a1, a2, a3 = (_frac(a) for a in frame)
    if a1 == 0 or a2 == 0:
        raise DomainError("frame needs alpha1 != 0 and alpha2 != 0")
    if isinstance(g, Poly):
        g = RatFun(g)
    return g.compose_affine(a2, a3) * a1


def build_canonical(spec: FamilySpec) -> RatFun:
    tag = spec.tag
    if tag is Family.POWER:
        return build_power(spec.Q)
    if tag is Family.F2:
        return RatFun(build_f2(spec.n))
    if tag is Family.F3:
        return build_f3(spec.n, spec.K)
    if tag is Family.F4:
        return build_f4(spec.n)
    if tag is Family.BESSEL_TRUNC:
        return RatFun(build_bessel_truncation(spec.terms))
    raise DomainError(f"{tag.name} is a catalogue entry with no constructor")
