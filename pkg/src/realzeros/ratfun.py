"""Reduced rational functions over the rationals."""

from __future__ import annotations

from fractions import Fraction

from .algebra import DomainError, Number, Poly, multiplicity, poly_divmod, poly_gcd


class HypothesisViolated(DomainError):
    """``f''/f`` has zeros, or ``f''`` vanishes identically."""

    def __init__(self, message: str, numerator: Poly | None = None):
        super().__init__(message)
        self.numerator = numerator


class RatFun:
    """``num/den`` with ``gcd(num, den) = 1`` and ``den`` monic.

    The zero function is stored as ``0/1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, _reduced: bool = False):
        if den is None:
            den = Poly.const(1)
        if not _reduced:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def const(cls, c: Number) -> "RatFun":
        return cls(Poly.const(c))

    @classmethod
    def z(cls) -> "RatFun":
        return cls(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self == _as_ratfun(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, _reduced=True)

    def __add__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return _as_ratfun(other) - self

    def __mul__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return _as_ratfun(other) / self

    def __pow__(self, k: int) -> "RatFun":
        if k >= 0:
            return RatFun(self.num**k, self.den**k, _reduced=k > 0)
        if self.is_zero():
            raise ZeroDivisionError("negative power of the zero function")
        return RatFun(self.den ** (-k), self.num ** (-k))

    def __call__(self, x: Number) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def derivative(self, k: int = 1) -> "RatFun":
        f = self
        for _ in range(k):
            f = ratfun_derivative(f)
        return f

    def compose_affine(self, alpha: Number, beta: Number) -> "RatFun":
        return RatFun(self.num.compose_affine(alpha, beta), self.den.compose_affine(alpha, beta))


def _as_ratfun(other) -> RatFun:
    if isinstance(other, RatFun):
        return other
    if isinstance(other, Poly):
        return RatFun(other)
    if isinstance(other, (int, Fraction)):
        return RatFun.const(other)
    return NotImplemented


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return Poly(), Poly.const(1)
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, r1 = poly_divmod(num, g)
            den, r2 = poly_divmod(den, g)
            assert r1.is_zero() and r2.is_zero()
    lead = den.lc
    return num.scale(1 / lead), den.scale(1 / lead)


def ratfun_reduce(num: Poly, den: Poly) -> RatFun:
    return RatFun(num, den)


def ratfun_derivative(f: RatFun) -> RatFun:
    if f.is_polynomial():
        return RatFun(f.num.derivative(), f.den, _reduced=True)
    return RatFun(f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den)


def log_derivative(f: RatFun) -> RatFun:
    """``f'/f``: simple poles whose residues are the zero/pole multiplicities."""
    if f.is_zero():
        raise DomainError("log derivative of the zero function")
    return ratfun_derivative(f) / f


def f_over_fpp(f: RatFun) -> Poly:
    """Return ``S = f/f''`` as an exact polynomial.

    Requires ``f''/f`` to have no zeros in the plane, which for a rational
    function means its reduced numerator is a nonzero constant.
    """
    if f.is_constant():
        raise DomainError("f is constant")
    fpp = f.derivative(2)
    if fpp.is_zero():
        raise HypothesisViolated("f'' vanishes identically")
    ratio = fpp / f
    if ratio.num.degree > 0:
        raise HypothesisViolated("f''/f has zeros", ratio.num)
    return ratio.den.scale(1 / ratio.num.lc)


def compute_m(f: RatFun) -> int:
    """Number of zeros minus number of poles in the finite plane."""
    if f.is_constant():
        raise DomainError("m is undefined for a constant function")
    return f.num.degree - f.den.degree


def pole_order(f: RatFun, x: Number) -> int:
    if f.den(x) != 0:
        return 0
    return multiplicity(f.den, x)
