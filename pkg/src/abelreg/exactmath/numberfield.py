"""Number fields Q[x]/(f) with exact arithmetic, norms, traces and the
conjugate-product descent of polynomials to Q.

A field of degree 1 encodes Q itself.  Minimal polynomials are required
monic and squarefree; for degree >= 2 they must additionally have no
rational root.  Irreducibility beyond that is not verified: invalid data
surfaces later as a failed perfect-square extraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from ..errors import AlgebraDataError
from .polynomials import Poly, lagrange_interpolate, poly_gcd, rational_roots

Scalar = Union[int, Fraction]


class NumberField:
    """Q[x]/(min_poly), with elements in the power basis of the generator."""

    def __init__(self, min_poly: Poly):
        if min_poly.degree < 1:
            raise AlgebraDataError("min_poly must have degree >= 1")
        if not min_poly.is_monic:
            raise AlgebraDataError("min_poly must be monic")
        if poly_gcd(min_poly, min_poly.derivative()).degree > 0:
            raise AlgebraDataError("min_poly must be squarefree")
        if min_poly.degree >= 2 and rational_roots(min_poly):
            raise AlgebraDataError("min_poly of degree >= 2 has a rational root")
        self.min_poly = min_poly

    @staticmethod
    def rationals() -> "NumberField":
        return NumberField(Poly.x())

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self) -> int:
        return hash(("NumberField", self.min_poly))

    def __repr__(self) -> str:
        return f"NumberField({self.min_poly.pretty('x')})"

    def element(self, coeffs: Union[Scalar, Iterable[Scalar], Poly]) -> "FieldElement":
        if isinstance(coeffs, (int, Fraction)):
            coeffs = Poly.constant(coeffs)
        elif not isinstance(coeffs, Poly):
            coeffs = Poly(coeffs)
        return FieldElement(self, coeffs % self.min_poly)

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def gen(self) -> "FieldElement":
        return self.element(Poly.x())


class FieldElement:
    """An element of a NumberField, reduced modulo the minimal polynomial."""

    __slots__ = ("field", "repr_poly")

    def __init__(self, field: NumberField, repr_poly: Poly):
        self.field = field
        self.repr_poly = repr_poly

    def _check(self, other: "FieldElement") -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {other!r}")
        if other.field != self.field:
            raise AlgebraDataError("mismatched parent fields")
        return other

    @property
    def is_zero(self) -> bool:
        return self.repr_poly.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.repr_poly == Poly.constant(other)
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.repr_poly == other.repr_poly
        )

    def __hash__(self) -> int:
        return hash((self.field, self.repr_poly))

    def __add__(self, other) -> "FieldElement":
        other = self._check(other)
        return FieldElement(self.field, self.repr_poly + other.repr_poly)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, -self.repr_poly)

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._check(other) + (-self)

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, self.repr_poly * other)
        other = self._check(other)
        return FieldElement(
            self.field, (self.repr_poly * other.repr_poly) % self.field.min_poly
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid: s*repr + t*min_poly = gcd = const
        r0, r1 = self.field.min_poly, self.repr_poly
        s0, s1 = Poly(), Poly.constant(1)
        while not r1.is_zero:
            q, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise AlgebraDataError(
                "element is a zero divisor; min_poly is not irreducible"
            )
        return FieldElement(self.field, (s0 * (Fraction(1) / r0.coeffs[0])) % self.field.min_poly)

    def __truediv__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * self._check(other).inverse()

    def as_rational(self) -> Fraction:
        if self.repr_poly.degree > 0:
            raise AlgebraDataError("element is not rational")
        return self.repr_poly(0)

    def apply_generator_image(self, image: "FieldElement") -> "FieldElement":
        """Evaluate the power-basis representation at another element."""
        acc = self.field.zero()
        for c in reversed(self.repr_poly.coeffs):
            acc = acc * image + c
        return acc

    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self on the power basis, columns first."""
        t = self.field.degree
        gen = self.field.gen()
        cols = []
        power = self.field.one()
        for _ in range(t):
            prod = self * power
            col = [Fraction(0)] * t
            for i, c in enumerate(prod.repr_poly.coeffs):
                col[i] = c
            cols.append(col)
            power = power * gen
        return [[cols[j][i] for j in range(t)] for i in range(t)]

    def __repr__(self) -> str:
        return f"FieldElement({self.repr_poly.pretty('a')})"


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k] == 0:
                continue
            f = m[i][k] * inv
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def nf_trace(e: FieldElement) -> Fraction:
    """Field trace: trace of the multiplication matrix."""
    m = e.mult_matrix()
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def nf_norm(e: FieldElement) -> Fraction:
    """Field norm: the product of all embedded conjugates of e."""
    if e.field.is_rational:
        return e.as_rational()
    return _fraction_det(e.mult_matrix())


def conjugate_product_descend(
    coeffs: Sequence[FieldElement], field: Optional[NumberField] = None
) -> Poly:
    """Product over all embeddings of a polynomial with coefficients in a
    number field, as a polynomial over Q.

    Computed by evaluating at t*deg + 1 rational points, taking field
    norms, and interpolating; the degree multiplies by [field : Q].
    """
    coeffs = list(coeffs)
    if field is None:
        if not coeffs:
            raise ValueError("empty polynomial needs an explicit field")
        field = coeffs[0].field
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    if not coeffs:
        return Poly()
    t = field.degree
    deg = (len(coeffs) - 1) * t
    points = []
    for k in range(deg + 1):
        c = Fraction(k)
        value = field.zero()
        for a in reversed(coeffs):
            value = value * c + a
        points.append((c, nf_norm(value)))
    return lagrange_interpolate(points)
