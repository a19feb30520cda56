"""Univariate polynomials over the rationals, Sturm root counting and
exact square roots.

Coefficients are `fractions.Fraction` throughout; there is no floating
point anywhere in this module.  Polynomials are immutable; the zero
polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Union[int, Fraction]


def sqrt_fraction(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None if x is not a square."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


class Poly:
    """A univariate polynomial over Q, stored as ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def constant(c: Scalar) -> "Poly":
        return Poly([c])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading
        for k in range(len(rem) - 1, d - 1, -1):
            if rem[k] == 0:
                continue
            f = rem[k] / lc
            q[k - d] = f
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= f * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.leading
        return Poly(c / lc for c in self.coeffs)

    def shift(self, t: Scalar) -> "Poly":
        """Return p(x + t)."""
        result = Poly()
        lin = Poly([Fraction(t), 1])
        for c in reversed(self.coeffs):
            result = result * lin + Poly.constant(c)
        return result

    def scale_arg(self, c: Scalar) -> "Poly":
        """Return p(c * x)."""
        c = Fraction(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def pretty(self, var: str = "N") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _coerce(v) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.constant(v)
    raise TypeError(f"cannot coerce {v!r} to Poly")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


@dataclass(frozen=True)
class RootProfile:
    """Real-root counts of a polynomial, with multiplicity."""

    poly: Poly
    positive: int
    zero: int
    negative: int

    @property
    def total_real(self) -> int:
        return self.positive + self.zero + self.negative


def _strip_root_at(p: Poly, c: Fraction) -> tuple[Poly, int]:
    """Divide out the factor (x - c) as many times as it divides p."""
    k = 0
    lin = Poly([-c, 1])
    while not p.is_zero and p(c) == 0:
        p = p // lin
        k += 1
    return p, k


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero]


def _variations(signs: Sequence[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sign_at(p: Poly, c: Fraction) -> int:
    v = p(c)
    return (v > 0) - (v < 0)


def _sign_at_plus_inf(p: Poly) -> int:
    return (p.leading > 0) - (p.leading < 0)


def _sign_at_minus_inf(p: Poly) -> int:
    s = _sign_at_plus_inf(p)
    return s if p.degree % 2 == 0 else -s


def _count_distinct_in(chain: list[Poly], lo, hi) -> int:
    """Distinct real roots in (lo, hi); endpoints are +-inf or non-roots."""

    def var_at(point) -> int:
        if point == "+inf":
            return _variations([_sign_at_plus_inf(q) for q in chain])
        if point == "-inf":
            return _variations([_sign_at_minus_inf(q) for q in chain])
        return _variations([_sign_at(q, point) for q in chain])

    return var_at(lo) - var_at(hi)


def _squarefree_tower(p: Poly) -> list[Poly]:
    """p, gcd(p, p'), gcd of that with its derivative, ...

    A root of multiplicity m of p is a root of exactly the first m layers,
    so summing distinct-root counts over layers counts with multiplicity.
    """
    tower = []
    while not p.is_zero and p.degree > 0:
        tower.append(p)
        p = poly_gcd(p, p.derivative())
    return tower


def count_roots_greater(p: Poly, c: Scalar) -> tuple[int, int]:
    """(number of roots of p in (c, inf) with multiplicity, mult of c)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    c = Fraction(c)
    p, mult_c = _strip_root_at(p, c)
    count = 0
    for layer in _squarefree_tower(p):
        layer, _ = _strip_root_at(layer, c)
        if layer.degree > 0:
            count += _count_distinct_in(_sturm_chain(layer), c, "+inf")
    return count, mult_c


def sturm_root_profile(p: Poly) -> RootProfile:
    """Positive/zero/negative real-root counts of p, with multiplicity."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root profile")
    zero_mult = 0
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    stripped = Poly(coeffs)
    pos = neg = 0
    for layer in _squarefree_tower(stripped):
        layer, _ = _strip_root_at(layer, Fraction(0))
        if layer.degree > 0:
            chain = _sturm_chain(layer)
            pos += _count_distinct_in(chain, Fraction(0), "+inf")
            neg += _count_distinct_in(chain, "-inf", Fraction(0))
    return RootProfile(poly=p, positive=pos, zero=zero_mult, negative=neg)


def poly_exact_sqrt(p: Poly) -> Optional[Poly]:
    """The q with positive leading coefficient and q*q == p, else None.

    Coefficient matching from the top degree down; any surviving
    mismatch, odd degree, or non-square leading coefficient gives None.
    """
    if p.is_zero:
        return None
    if p.degree % 2 != 0 or p.leading <= 0:
        return None
    n = p.degree // 2
    lead = sqrt_fraction(p.leading)
    if lead is None:
        return None
    q = [Fraction(0)] * (n + 1)
    q[n] = lead
    for k in range(n - 1, -1, -1):
        # coefficient of x^(n+k) in q^2 is 2*q[n]*q[k] + cross terms
        s = Fraction(0)
        for i in range(k + 1, n):
            j = n + k - i
            if k < j < n:
                s += q[i] * q[j]
        q[k] = (p.coeffs[n + k] - s) / (2 * lead)
    cand = Poly(q)
    if cand * cand == p:
        return cand
    return None


def cauchy_bound(p: Poly) -> Fraction:
    """B = 1 + max|a_i / a_deg|; every real root of p lies in [-B, B]."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root bound")
    lc = abs(p.leading)
    if p.degree == 0:
        return Fraction(1)
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1])


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else 1


def _divisors(n: int) -> list[int]:
    divs = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.append(d)
            if d != n // d:
                divs.append(n // d)
        d += 1
    return sorted(divs)


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of p, by the rational root test."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = denom_lcm * c.denominator // _int_gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)
    roots = [Fraction(0)] if len(ints) < len(p.coeffs) else []
    if not ints:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and p(cand) == 0:
                    roots.append(cand)
    return roots


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points."""
    result = Poly()
    xs = [Fraction(x) for x, _ in points]
    for i, (_, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = Poly.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Poly([-xj, 1])
            denom *= xs[i] - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
