"""Exact univariate polynomials over the rationals and Sturm root counting.

Coefficients are :class:`fractions.Fraction` values stored in ascending
order of degree.  The zero polynomial has an empty coefficient tuple.

Root counting works on the square-free part and evaluates signs with pure
integer arithmetic, so every count returned here is a certificate rather
than a numerical estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

NEG_INF = float("-inf")
POS_INF = float("inf")


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def _frac(c: Number) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Dense polynomial with rational coefficients, ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number], lead: Number = 1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c: Number) -> "Poly":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / _frac(c))

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c: Number) -> "Poly":
        c = _frac(c)
        return Poly(c * a for a in self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise DomainError("zero polynomial has no monic form")
        return self.scale(1 / self.lc)

    def derivative(self, k: int = 1) -> "Poly":
        p = self
        for _ in range(k):
            p = poly_derivative(p)
        return p

    def compose_affine(self, alpha: Number, beta: Number) -> "Poly":
        return poly_compose_affine(self, alpha, beta)


def _as_poly(other) -> Poly:
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly.const(other)
    return NotImplemented


def format_poly(p: Poly, var: str = "z") -> str:
    """Plain descending-power rendering, e.g. ``3*z^2 - z + 1/2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return Poly(), a
    inv = 1 / b.lc
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            q = c * inv
            quot[k - db] = q
            for j, cb in enumerate(b.coeffs):
                rem[k - db + j] -= q * cb
    return Poly(quot), Poly(rem[:db])


def poly_derivative(p: Poly) -> Poly:
    return Poly(k * c for k, c in enumerate(p.coeffs) if k)


def poly_compose_affine(p: Poly, alpha: Number, beta: Number) -> Poly:
    """Return ``p(alpha*z + beta)``."""
    alpha, beta = _frac(alpha), _frac(beta)
    if alpha == 0:
        raise DomainError("affine substitution needs alpha != 0")
    lin = Poly([beta, alpha])
    acc = Poly()
    for c in reversed(p.coeffs):
        acc = acc * lin + c
    return acc


# --- integer primitive representation -------------------------------------

def to_primitive_int(p: Poly) -> list[int]:
    """Integer coefficients of ``c*p`` for the unique ``c > 0`` making them coprime."""
    if p.is_zero():
        return []
    den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(math.gcd, ints)
    return [c // g for c in ints]


def _int_primitive(cs: list[int]) -> list[int]:
    g = reduce(math.gcd, cs, 0)
    return [c // g for c in cs] if g > 1 else cs


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of ``|lc(b)|**delta * a`` by ``b`` over the integers.

    The multiplier is positive, so the result is a positive multiple of the
    true rational remainder.
    """
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - len(b) + 1
    if delta <= 0:
        return rem
    scale = abs(lb) ** delta
    rem = [c * scale for c in rem]
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            q = c // lb  # exact: rem has been pre-multiplied by lb**delta
            for j, cb in enumerate(b):
                rem[k - db + j] -= q * cb
    rem = rem[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    a, b = _int_primitive(a), _int_primitive(b)
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r) if r else []
    return a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    return Poly(_int_gcd(to_primitive_int(p), to_primitive_int(q))).monic()


def squarefree_part(p: Poly) -> Poly:
    """``p / gcd(p, p')`` made monic."""
    if p.is_zero():
        raise DomainError("zero polynomial has no square-free part")
    if p.degree == 0:
        return Poly.const(1)
    g = poly_gcd(p, poly_derivative(p))
    q, r = poly_divmod(p, g)
    assert r.is_zero()
    return q.monic()


def multiplicity(p: Poly, root: Number) -> int:
    """Multiplicity of ``root`` as a zero of nonzero ``p``."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    lin = Poly([-_frac(root), 1])
    k = 0
    while True:
        q, r = poly_divmod(p, lin)
        if not r.is_zero():
            return k
        p, k = q, k + 1


# --- Sturm machinery --------------------------------------------------------

@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence certifying real-root counts of ``source``.

    ``chain[0]`` is ``source`` and ``chain[1]`` its derivative; later entries
    are negated remainders, each scaled by a positive constant to clear
    denominators and content, which leaves every sign unchanged.
    """

    chain: tuple[Poly, ...]
    source: Poly

    def variations(self, x: Number) -> int:
        return _variations(self._ints, _frac(x))

    @property
    def _ints(self) -> list[list[int]]:
        return [to_primitive_int(c) for c in self.chain]

    def ends_in_constant(self) -> bool:
        return self.chain[-1].degree == 0


def _sign_at(cs: list[int], x: Fraction) -> int:
    """Sign of the integer polynomial ``cs`` at rational ``x``."""
    if not cs:
        return 0
    p, q = x.numerator, x.denominator
    acc = cs[-1]
    qpow = 1
    for c in reversed(cs[:-1]):
        qpow *= q
        acc = acc * p + c * qpow
    return (acc > 0) - (acc < 0)


def _variations(chain: Sequence[list[int]], x: Fraction) -> int:
    count = 0
    last = 0
    for cs in chain:
        s = _sign_at(cs, x)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _int_sturm(sqf: list[int]) -> list[list[int]]:
    d = [k * c for k, c in enumerate(sqf) if k]
    chain = [sqf, _int_primitive(d)] if d else [sqf]
    while len(chain[-1]) > 1:
        r = _int_prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_int_primitive([-c for c in r]))
    return chain


def sturm_chain(p: Poly) -> SturmChain:
    """Sturm chain of the square-free part of ``p``."""
    sqf = squarefree_part(p)
    ints = _int_sturm(to_primitive_int(sqf))
    polys = [sqf, poly_derivative(sqf)] + [Poly(c) for c in ints[2:]]
    return SturmChain(tuple(polys[: len(ints)]), sqf)


def cauchy_bound(p: Poly) -> Fraction:
    """``1 + max|c_i| / |c_deg|``; every root has modulus strictly below it."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    lead = abs(p.lc)
    return 1 + max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0)) / lead


class _Counter:
    """Evaluates Sturm variations on one square-free polynomial, with caching."""

    def __init__(self, p: Poly):
        if p.is_zero():
            raise DomainError("zero polynomial")
        self.sqf = squarefree_part(p)
        self.ints = _int_sturm(to_primitive_int(self.sqf))
        self.bound = cauchy_bound(self.sqf)
        self._cache: dict[Fraction, int] = {}

    def resolve(self, x) -> Fraction:
        if x == NEG_INF:
            return -self.bound
        if x == POS_INF:
            return self.bound
        return _frac(x)

    def v(self, x: Fraction) -> int:
        try:
            return self._cache[x]
        except KeyError:
            n = self._cache[x] = _variations(self.ints, x)
            return n

    def count(self, a, b) -> int:
        """Distinct roots in ``(a, b]``."""
        a, b = self.resolve(a), self.resolve(b)
        if not a < b:
            raise DomainError("count_real_roots needs a < b")
        return self.v(a) - self.v(b)

    def is_root(self, x: Fraction) -> bool:
        return _sign_at(self.ints[0], x) == 0


def count_real_roots(p: Poly, a=NEG_INF, b=POS_INF) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(a, b]``.

    Infinite endpoints are replaced by the Cauchy bound of the square-free
    part.  A root at ``a`` is excluded and a root at ``b`` included; with
    zeros dropped from the sign sequence the variation difference already
    has these semantics, so no endpoint perturbation is needed.
    """
    return _Counter(p).count(a, b)


def count_roots_between(p: Poly, lo, hi, *, lo_closed=False, hi_closed=True) -> int:
    """Distinct real roots in an interval with selectable endpoint closure."""
    c = _Counter(p)
    n = c.count(lo, hi)
    if lo_closed and lo not in (NEG_INF, POS_INF) and c.is_root(_frac(lo)):
        n += 1
    if not hi_closed and hi not in (NEG_INF, POS_INF) and c.is_root(_frac(hi)):
        n -= 1
    return n


@dataclass(frozen=True)
class RealRootCertificate:
    """Outcome of :func:`certify_all_roots_real` with the chain for audit."""

    all_real: bool
    degree: int
    real_count: int
    chain: SturmChain

    def __bool__(self) -> bool:
        return self.all_real


def certify_all_roots_real(p: Poly) -> RealRootCertificate:
    if p.is_zero():
        raise DomainError("zero polynomial")
    chain = sturm_chain(p)
    sqf = chain.source
    if sqf.degree == 0:
        return RealRootCertificate(True, 0, 0, chain)
    n = count_real_roots(sqf)
    return RealRootCertificate(n == sqf.degree, sqf.degree, n, chain)


def isolate_real_roots(p: Poly, max_width: Number | None = None, lo=NEG_INF, hi=POS_INF):
    """Disjoint intervals ``(a, b]``, each holding exactly one distinct real root.

    Intervals come back sorted and, when ``max_width`` is given, no wider than
    it.  Restricting to ``(lo, hi]`` is optional.
    """
    c = _Counter(p)
    if c.sqf.degree == 0:
        return []
    lo, hi = c.resolve(lo), c.resolve(hi)
    width = None if max_width is None else _frac(max_width)
    if width is not None and width <= 0:
        raise DomainError("max_width must be positive")
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = c.v(a) - c.v(b)
        if n == 0:
            continue
        if n == 1 and (width is None or b - a <= width):
            out.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    out.sort()
    return out


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots of ``p``, sorted ascending.

    A rational root ``r`` of a primitive integer polynomial with leading
    coefficient ``L`` satisfies ``L*r in Z``.  Isolating each real root to
    width below ``1/|L|`` leaves a single integer candidate to test exactly.
    """
    if p.is_zero():
        raise DomainError("zero polynomial")
    sqf = squarefree_part(p)
    if sqf.degree <= 0:
        return []
    ints = to_primitive_int(sqf)
    lead = abs(ints[-1])
    width = Fraction(1, 2 * lead)
    roots = []
    for a, b in isolate_real_roots(sqf, width):
        m = math.floor(b * lead)
        r = Fraction(m, lead)
        if a < r <= b and _sign_at(ints, r) == 0:
            roots.append(r)
    return roots
