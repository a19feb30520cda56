"""Data model for the decomposition of an endomorphism algebra into
simple matrix factors over division algebras, together with the
polarization involution and per-factor reduced characteristic
polynomials.

Supported division-algebra kinds are a field (the center itself) and a
quaternion algebra over the center.  Matrix entries are FieldElement
values for the field kind and Quat values (four coordinates in the
basis 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k) for the
quaternion kind.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    AlgebraDataError,
    ContextMismatch,
    InvalidInvolution,
    NonIntegralExponent,
    NonPositiveInvolution,
    SquareExtractionFailed,
    TypeConstraintViolation,
)
from .exactmath import (
    FieldElement,
    NumberField,
    Poly,
    nf_trace,
    sturm_root_profile,
)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Quat:
    """x + y*i + z*j + w*k with coordinates in the center field."""

    x: FieldElement
    y: FieldElement
    z: FieldElement
    w: FieldElement

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero and self.z.is_zero and self.w.is_zero

    @property
    def is_pure(self) -> bool:
        return self.x.is_zero


class FieldKind:
    """The division algebra is the center itself (m = 1)."""

    m = 1

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldKind)

    def __hash__(self) -> int:
        return hash("FieldKind")

    def __repr__(self) -> str:
        return "FieldKind()"


class QuaternionKind:
    """Quaternion algebra (a, b) over the center (m = 2)."""

    m = 2

    def __init__(self, a: FieldElement, b: FieldElement):
        if a.is_zero or b.is_zero:
            raise AlgebraDataError("quaternion parameters a, b must be nonzero")
        self.a = a
        self.b = b

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuaternionKind)
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash(("QuaternionKind", self.a, self.b))

    def __repr__(self) -> str:
        return f"QuaternionKind(a={self.a!r}, b={self.b!r})"

    def mul(self, u: Quat, v: Quat) -> Quat:
        a, b = self.a, self.b
        return Quat(
            x=u.x * v.x + a * (u.y * v.y) + b * (u.z * v.z) - a * b * (u.w * v.w),
            y=u.x * v.y + u.y * v.x - b * (u.z * v.w) + b * (u.w * v.z),
            z=u.x * v.z + u.z * v.x + a * (u.y * v.w) - a * (u.w * v.y),
            w=u.x * v.w + u.w * v.x + u.y * v.z - u.z * v.y,
        )

    def conj(self, u: Quat) -> Quat:
        return Quat(u.x, -u.y, -u.z, -u.w)

    def nrd(self, u: Quat) -> FieldElement:
        a, b = self.a, self.b
        return u.x * u.x - a * (u.y * u.y) - b * (u.z * u.z) + a * b * (u.w * u.w)

    def trd(self, u: Quat) -> FieldElement:
        return u.x + u.x

    def inv(self, u: Quat) -> Quat:
        n = self.nrd(u)
        if n.is_zero:
            raise ZeroDivisionError("quaternion with zero reduced norm")
        ninv = n.inverse()
        c = self.conj(u)
        return Quat(c.x * ninv, c.y * ninv, c.z * ninv, c.w * ninv)

    def regular_rep(self, u: Quat) -> list[list[FieldElement]]:
        """Left multiplication by u on the basis (1, i, j, k), over the center."""
        a, b = self.a, self.b
        x, y, z, w = u.x, u.y, u.z, u.w
        return [
            [x, a * y, b * z, -(a * b * w)],
            [y, x, b * w, -(b * z)],
            [z, -(a * w), x, a * y],
            [w, -z, y, x],
        ]


Kind = Union[FieldKind, QuaternionKind]


@dataclass
class InvolutionSpec:
    """Base involution on the division algebra plus the twisting matrix H.

    The full involution of a matrix M is H^-1 * iota(M)^T * H, with iota
    the base involution applied entrywise.  gram_H = None means the
    identity matrix.
    """

    base: str = "identity"
    conj_gen_image: Optional[FieldElement] = None
    s: Optional[Quat] = None
    gram_H: Optional[Sequence[Sequence]] = None


BASES_FIELD = ("identity", "field_conjugation")
BASES_QUATERNION = ("quaternion_standard", "quaternion_twisted")


class WedderburnComponent:
    """One simple factor: r x r matrices over a division algebra with a
    positive involution."""

    def __init__(
        self,
        name: str,
        dim_g: int,
        mult_r: int,
        center: NumberField,
        kind: Kind,
        albert_type: str,
        involution: Optional[InvolutionSpec] = None,
    ):
        if dim_g < 1 or mult_r < 1:
            raise AlgebraDataError("dim_g and mult_r must be positive")
        if albert_type not in ("I", "II", "III", "IV"):
            raise AlgebraDataError(f"unknown albert_type {albert_type!r}")
        self.name = name
        self.dim_g = dim_g
        self.mult_r = mult_r
        self.center = center
        self.kind = kind
        self.albert_type = albert_type
        if involution is None:
            base = "identity" if isinstance(kind, FieldKind) else "quaternion_standard"
            involution = InvolutionSpec(base=base)
        self.involution = involution
        self._h_matrix = None
        self._h_inverse = None

    @property
    def t(self) -> int:
        return self.center.degree

    @property
    def m(self) -> int:
        return self.kind.m

    @property
    def n(self) -> int:
        """Degree r*m of the factor as a central simple algebra."""
        return self.mult_r * self.m

    @property
    def exponent(self) -> int:
        e = Fraction(2 * self.dim_g, self.t * self.m)
        if e.denominator != 1 or e <= 0:
            raise NonIntegralExponent(
                f"component {self.name}: exponent 2*{self.dim_g}/"
                f"({self.t}*{self.m}) = {e} is not a positive integer"
            )
        return int(e)

    # ----- entry algebra -------------------------------------------------

    def ent_zero(self):
        if isinstance(self.kind, FieldKind):
            return self.center.zero()
        z = self.center.zero()
        return Quat(z, z, z, z)

    def ent_one(self):
        if isinstance(self.kind, FieldKind):
            return self.center.one()
        z = self.center.zero()
        return Quat(self.center.one(), z, z, z)

    def ent_from_center(self, c: FieldElement):
        if isinstance(self.kind, FieldKind):
            return c
        z = self.center.zero()
        return Quat(c, z, z, z)

    def ent_from_rational(self, c: Scalar):
        return self.ent_from_center(self.center.element(Fraction(c)))

    def ent_add(self, u, v):
        if isinstance(self.kind, FieldKind):
            return u + v
        return Quat(u.x + v.x, u.y + v.y, u.z + v.z, u.w + v.w)

    def ent_neg(self, u):
        if isinstance(self.kind, FieldKind):
            return -u
        return Quat(-u.x, -u.y, -u.z, -u.w)

    def ent_mul(self, u, v):
        if isinstance(self.kind, FieldKind):
            return u * v
        return self.kind.mul(u, v)

    def ent_scale(self, u, c: Scalar):
        c = Fraction(c)
        if isinstance(self.kind, FieldKind):
            return u * c
        return Quat(u.x * c, u.y * c, u.z * c, u.w * c)

    def ent_inv(self, u):
        if isinstance(self.kind, FieldKind):
            return u.inverse()
        return self.kind.inv(u)

    def ent_is_zero(self, u) -> bool:
        if isinstance(self.kind, FieldKind):
            return u.is_zero
        return u.is_zero

    def ent_eq(self, u, v) -> bool:
        return u == v

    def trd_entry(self, u) -> FieldElement:
        """Reduced trace of an entry down to the center."""
        if isinstance(self.kind, FieldKind):
            return u
        return self.kind.trd(u)

    def base_involution(self, u):
        base = self.involution.base
        if isinstance(self.kind, FieldKind):
            if base == "identity":
                return u
            if base == "field_conjugation":
                return u.apply_generator_image(self.involution.conj_gen_image)
        else:
            if base == "quaternion_standard":
                return self.kind.conj(u)
            if base == "quaternion_twisted":
                s = self.involution.s
                return self.kind.mul(self.kind.mul(s, self.kind.conj(u)), self.kind.inv(s))
        raise InvalidInvolution(
            f"component {self.name}: base involution {base!r} is not valid "
            f"for kind {type(self.kind).__name__}"
        )

    # ----- matrices over the division algebra ----------------------------

    def mat_identity(self):
        r = self.mult_r
        return tuple(
            tuple(self.ent_one() if i == j else self.ent_zero() for j in range(r))
            for i in range(r)
        )

    def mat_zero(self):
        r = self.mult_r
        return tuple(tuple(self.ent_zero() for _ in range(r)) for _ in range(r))

    def mat_add(self, A, B):
        r = self.mult_r
        return tuple(
            tuple(self.ent_add(A[i][j], B[i][j]) for j in range(r)) for i in range(r)
        )

    def mat_scale(self, A, c: Scalar):
        r = self.mult_r
        return tuple(
            tuple(self.ent_scale(A[i][j], c) for j in range(r)) for i in range(r)
        )

    def mat_mul(self, A, B):
        r = self.mult_r
        out = []
        for i in range(r):
            row = []
            for j in range(r):
                acc = self.ent_zero()
                for k in range(r):
                    acc = self.ent_add(acc, self.ent_mul(A[i][k], B[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def mat_transpose(self, A):
        r = self.mult_r
        return tuple(tuple(A[j][i] for j in range(r)) for i in range(r))

    def mat_base_involution(self, A):
        r = self.mult_r
        return tuple(
            tuple(self.base_involution(A[i][j]) for j in range(r)) for i in range(r)
        )

    def mat_eq(self, A, B) -> bool:
        r = self.mult_r
        return all(A[i][j] == B[i][j] for i in range(r) for j in range(r))

    def mat_inverse(self, A):
        """Inverse over the division algebra, by row reduction of [A | I].

        Rows are combined by left multiplication only, which is valid over
        a noncommutative division ring.
        """
        r = self.mult_r
        aug = [list(A[i]) + [self.ent_one() if j == i else self.ent_zero() for j in range(r)] for i in range(r)]
        for col in range(r):
            piv = next(
                (i for i in range(col, r) if not self.ent_is_zero(aug[i][col])), None
            )
            if piv is None:
                raise AlgebraDataError("matrix is not invertible")
            if piv != col:
                aug[col], aug[piv] = aug[piv], aug[col]
            inv = self.ent_inv(aug[col][col])
            aug[col] = [self.ent_mul(inv, v) for v in aug[col]]
            for i in range(r):
                if i == col or self.ent_is_zero(aug[i][col]):
                    continue
                f = aug[i][col]
                aug[i] = [
                    self.ent_add(aug[i][j], self.ent_neg(self.ent_mul(f, aug[col][j])))
                    for j in range(2 * r)
                ]
        return tuple(tuple(row[r:]) for row in aug)

    @property
    def gram_h(self):
        if self._h_matrix is None:
            H = self.involution.gram_H
            self._h_matrix = self.mat_identity() if H is None else tuple(
                tuple(row) for row in H
            )
        return self._h_matrix

    @property
    def gram_h_inverse(self):
        if self._h_inverse is None:
            self._h_inverse = self.mat_inverse(self.gram_h)
        return self._h_inverse

    def __repr__(self) -> str:
        return (
            f"WedderburnComponent({self.name!r}, g={self.dim_g}, r={self.mult_r}, "
            f"t={self.t}, m={self.m}, type {self.albert_type})"
        )


@dataclass(frozen=True)
class AlgebraElement:
    """A block element: an r x r matrix over the component's division algebra."""

    component: WedderburnComponent
    matrix: tuple

    def __post_init__(self):
        r = self.component.mult_r
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise AlgebraDataError(
                f"component {self.component.name}: matrix shape must be {r}x{r}"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.component is other.component
            and self.component.mat_eq(self.matrix, other.matrix)
        )


def rosati_apply(component: WedderburnComponent, e: AlgebraElement) -> AlgebraElement:
    """H^-1 * iota(M)^T * H with iota the entrywise base involution."""
    m = component.mat_transpose(component.mat_base_involution(e.matrix))
    m = component.mat_mul(component.gram_h_inverse, component.mat_mul(m, component.gram_h))
    return AlgebraElement(component, m)


def random_element(
    component: WedderburnComponent, rng: random.Random, bound: int = 5
) -> AlgebraElement:
    """A random block element with small rational coordinates."""

    def rand_center() -> FieldElement:
        return component.center.element(
            [Fraction(rng.randint(-bound, bound)) for _ in range(component.t)]
        )

    def rand_entry():
        if isinstance(component.kind, FieldKind):
            return rand_center()
        return Quat(rand_center(), rand_center(), rand_center(), rand_center())

    r = component.mult_r
    return AlgebraElement(
        component,
        tuple(tuple(rand_entry() for _ in range(r)) for _ in range(r)),
    )


def _delta_basis(component: WedderburnComponent):
    """Standard Q-basis of the division algebra (t*m^2 elements)."""
    gen_pows = []
    p = component.center.one()
    for _ in range(component.t):
        gen_pows.append(p)
        p = p * component.center.gen()
    if isinstance(component.kind, FieldKind):
        return gen_pows
    out = []
    z = component.center.zero()
    for c in gen_pows:
        out.append(Quat(c, z, z, z))
        out.append(Quat(z, c, z, z))
        out.append(Quat(z, z, c, z))
        out.append(Quat(z, z, z, c))
    return out


def check_positivity(component: WedderburnComponent):
    """Positive definiteness of (u, v) -> Trd(u * rosati(v)) on the
    standard basis of the factor.

    Returns (True, None) on success; on failure (False, k) with k the
    1-based index of the first nonpositive leading principal minor.
    """
    r = component.mult_r
    delta = _delta_basis(component)
    basis = []
    for k in range(r):
        for l in range(r):
            for d in delta:
                basis.append((k, l, d))
    dim = len(basis)

    rosati_mats = []
    for k, l, d in basis:
        mat = [[component.ent_zero() for _ in range(r)] for _ in range(r)]
        mat[k][l] = d
        e = AlgebraElement(component, tuple(tuple(row) for row in mat))
        rosati_mats.append(rosati_apply(component, e).matrix)

    def reduced_trace_to_q(u_pos, u_val, rv) -> Fraction:
        # b_u has a single nonzero entry at u_pos; only one diagonal entry
        # of b_u * rv survives.
        k, l = u_pos
        prod = component.ent_mul(u_val, rv[l][k])
        return nf_trace(component.trd_entry(prod))

    gram = [
        [
            reduced_trace_to_q((basis[u][0], basis[u][1]), basis[u][2], rosati_mats[v])
            for v in range(dim)
        ]
        for u in range(dim)
    ]

    # elimination pivots are ratios of successive leading principal minors
    m = [row[:] for row in gram]
    for k in range(dim):
        if m[k][k] <= 0:
            return False, k + 1
        inv = 1 / m[k][k]
        for i in range(k + 1, dim):
            if m[i][k] == 0:
                continue
            f = m[i][k] * inv
            for j in range(k, dim):
                m[i][j] -= f * m[k][j]
    return True, None


def _nf_lagrange(field: NumberField, points) -> list[FieldElement]:
    """Interpolation with FieldElement values at rational nodes."""
    xs = [x for x, _ in points]
    acc = [field.zero() for _ in range(len(points))]
    for i, (_, yi) in enumerate(points):
        if yi.is_zero:
            continue
        basis = Poly.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Poly([-xj, 1])
            denom *= xs[i] - xj
        scale = Fraction(1) / denom
        for d, c in enumerate(basis.coeffs):
            acc[d] = acc[d] + yi * (c * scale)
    while acc and acc[-1].is_zero:
        acc.pop()
    return acc


def _det_over_center(field: NumberField, rows) -> FieldElement:
    """Determinant of a matrix with FieldElement entries."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one()
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if not m[i][k].is_zero), None)
        if piv is None:
            return field.zero()
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        det = det * m[k][k]
        inv = m[k][k].inverse()
        for i in range(k + 1, n):
            if m[i][k].is_zero:
                continue
            f = m[i][k] * inv
            for j in range(k, n):
                m[i][j] = m[i][j] - f * m[k][j]
    return det * sign if sign < 0 else det


def _nf_poly_monic_sqrt(field: NumberField, coeffs: list[FieldElement]) -> list[FieldElement]:
    """Monic square root of a monic even-degree polynomial over the center."""
    deg = len(coeffs) - 1
    if deg % 2 != 0 or coeffs[-1] != field.one():
        raise SquareExtractionFailed("pencil determinant is not monic of even degree")
    n = deg // 2
    q = [field.zero() for _ in range(n + 1)]
    q[n] = field.one()
    half = Fraction(1, 2)
    for k in range(n - 1, -1, -1):
        s = field.zero()
        for i in range(k + 1, n):
            j = n + k - i
            if k < j < n:
                s = s + q[i] * q[j]
        q[k] = (coeffs[n + k] - s) * half
    # verify q*q == coeffs in full
    prod = [field.zero() for _ in range(2 * n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            prod[i + j] = prod[i + j] + q[i] * q[j]
    if any(prod[d] != coeffs[d] for d in range(2 * n + 1)):
        raise SquareExtractionFailed(
            "pencil determinant is not a perfect square over the center"
        )
    return q


def reduced_charpoly(
    component: WedderburnComponent, e: AlgebraElement
) -> list[FieldElement]:
    """Reduced characteristic polynomial of the pencil N*I + M, as a monic
    degree r*m polynomial over the center (ascending coefficients).

    Field kind: the symbolic determinant of (N*I + M).  Quaternion kind:
    the determinant of the 4r x 4r pencil obtained by replacing each
    entry with its left-regular-representation matrix, followed by exact
    extraction of its polynomial square root.
    """
    field = component.center
    if isinstance(component.kind, FieldKind):
        size = component.mult_r
        rows = e.matrix
    else:
        size = 4 * component.mult_r
        rows = []
        for i in range(component.mult_r):
            block_rows = [[] for _ in range(4)]
            for j in range(component.mult_r):
                rep = component.kind.regular_rep(e.matrix[i][j])
                for u in range(4):
                    block_rows[u].extend(rep[u])
            rows.extend(block_rows)

    points = []
    for c in range(size + 1):
        cf = Fraction(c)
        shifted = [
            [
                rows[i][j] + cf if i == j else rows[i][j]
                for j in range(size)
            ]
            for i in range(size)
        ]
        points.append((cf, _det_over_center(field, shifted)))
    det_coeffs = _nf_lagrange(field, points)
    if len(det_coeffs) != size + 1:
        raise SquareExtractionFailed("pencil determinant has wrong degree")
    if isinstance(component.kind, FieldKind):
        return det_coeffs
    return _nf_poly_monic_sqrt(field, det_coeffs)


class VarietyContext:
    """The full decomposition plus the square root of the polarization
    isogeny degree."""

    def __init__(
        self,
        components: Sequence[WedderburnComponent],
        sqrt_deg_phi: Scalar = 1,
    ):
        names = [c.name for c in components]
        if len(set(names)) != len(names):
            raise AlgebraDataError("component names must be pairwise distinct")
        self.components = tuple(components)
        self.sqrt_deg_phi = Fraction(sqrt_deg_phi)
        if self.sqrt_deg_phi <= 0:
            raise AlgebraDataError("sqrt_deg_phi must be positive")
        if self.g < 1:
            raise AlgebraDataError("total dimension must be at least 1")

    @property
    def g(self) -> int:
        return sum(c.mult_r * c.dim_g for c in self.components)


@dataclass(frozen=True)
class SymmetricClass:
    """A Rosati-fixed element, one block per component."""

    context: VarietyContext
    blocks: tuple

    @staticmethod
    def create(context: VarietyContext, blocks: Sequence[AlgebraElement]) -> "SymmetricClass":
        if len(blocks) != len(context.components):
            raise ContextMismatch("one block per component is required")
        for comp, blk in zip(context.components, blocks):
            if blk.component is not comp:
                raise ContextMismatch(
                    f"block for component {comp.name} built on a different component"
                )
            if rosati_apply(comp, blk) != blk:
                raise AlgebraDataError(
                    f"component {comp.name}: block is not fixed by the involution"
                )
        return SymmetricClass(context, tuple(blocks))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymmetricClass)
            and self.context is other.context
            and all(a == b for a, b in zip(self.blocks, other.blocks))
        )


def identity_class(ctx: VarietyContext) -> SymmetricClass:
    return SymmetricClass.create(
        ctx, [AlgebraElement(c, c.mat_identity()) for c in ctx.components]
    )


def zero_class(ctx: VarietyContext) -> SymmetricClass:
    return SymmetricClass.create(
        ctx, [AlgebraElement(c, c.mat_zero()) for c in ctx.components]
    )


def scalar_class(ctx: VarietyContext, c: Scalar) -> SymmetricClass:
    return SymmetricClass.create(
        ctx,
        [
            AlgebraElement(comp, comp.mat_scale(comp.mat_identity(), c))
            for comp in ctx.components
        ],
    )


def class_add(x: SymmetricClass, y: SymmetricClass) -> SymmetricClass:
    if x.context is not y.context:
        raise ContextMismatch("classes from different contexts")
    blocks = [
        AlgebraElement(comp, comp.mat_add(a.matrix, b.matrix))
        for comp, a, b in zip(x.context.components, x.blocks, y.blocks)
    ]
    return SymmetricClass.create(x.context, blocks)


def class_scale(x: SymmetricClass, c: Scalar) -> SymmetricClass:
    blocks = [
        AlgebraElement(comp, comp.mat_scale(a.matrix, c))
        for comp, a in zip(x.context.components, x.blocks)
    ]
    return SymmetricClass.create(x.context, blocks)


def class_shift(x: SymmetricClass, t: Scalar) -> SymmetricClass:
    """x + t * identity."""
    return class_add(x, scalar_class(x.context, t))


def symmetrize(ctx: VarietyContext, elements: Sequence[AlgebraElement]) -> SymmetricClass:
    """e + rosati(e) blockwise; always Rosati-fixed."""
    blocks = [
        AlgebraElement(comp, comp.mat_add(e.matrix, rosati_apply(comp, e).matrix))
        for comp, e in zip(ctx.components, elements)
    ]
    return SymmetricClass.create(ctx, blocks)


def _validate_component(component: WedderburnComponent, rng: random.Random) -> None:
    # exponent integrality (raises NonIntegralExponent)
    component.exponent

    kind_is_field = isinstance(component.kind, FieldKind)
    profile = sturm_root_profile(component.center.min_poly)
    totally_real = profile.total_real == component.t
    if component.albert_type == "I":
        if not kind_is_field:
            raise TypeConstraintViolation(
                f"component {component.name}: type I requires the field kind"
            )
        if not totally_real:
            raise TypeConstraintViolation(
                f"component {component.name}: type I center must be totally real"
            )
    elif component.albert_type in ("II", "III"):
        if kind_is_field:
            raise TypeConstraintViolation(
                f"component {component.name}: type {component.albert_type} "
                "requires the quaternion kind"
            )
        if not totally_real:
            raise TypeConstraintViolation(
                f"component {component.name}: type {component.albert_type} "
                "center must be totally real"
            )
    else:  # IV
        if profile.total_real != 0 or component.t % 2 != 0:
            raise TypeConstraintViolation(
                f"component {component.name}: type IV center must have even "
                "degree and no real embedding"
            )

    # base involution well-formedness
    base = component.involution.base
    if kind_is_field and base not in BASES_FIELD:
        raise InvalidInvolution(
            f"component {component.name}: base {base!r} invalid for field kind"
        )
    if not kind_is_field and base not in BASES_QUATERNION:
        raise InvalidInvolution(
            f"component {component.name}: base {base!r} invalid for quaternion kind"
        )
    if base == "field_conjugation":
        c = component.involution.conj_gen_image
        if c is None:
            raise InvalidInvolution(
                f"component {component.name}: field_conjugation needs conj_gen_image"
            )
        # c must be a root of min_poly and an involution of the field
        image_of_minpoly = component.center.zero()
        for coeff in reversed(component.center.min_poly.coeffs):
            image_of_minpoly = image_of_minpoly * c + coeff
        if not image_of_minpoly.is_zero:
            raise InvalidInvolution(
                f"component {component.name}: conj_gen_image is not a root of "
                "the center's minimal polynomial"
            )
        if c.apply_generator_image(c) != component.center.gen():
            raise InvalidInvolution(
                f"component {component.name}: field conjugation squared is not "
                "the identity"
            )
    if base == "quaternion_twisted":
        s = component.involution.s
        if s is None or s.is_zero or not s.is_pure:
            raise InvalidInvolution(
                f"component {component.name}: quaternion_twisted needs a "
                "nonzero pure quaternion s"
            )

    # H must be invertible and fixed by entrywise base involution + transpose
    try:
        component.gram_h_inverse
    except AlgebraDataError as exc:
        raise InvalidInvolution(
            f"component {component.name}: gram_H is not invertible"
        ) from exc
    h_fixed = component.mat_transpose(component.mat_base_involution(component.gram_h))
    if not component.mat_eq(h_fixed, component.gram_h):
        raise InvalidInvolution(
            f"component {component.name}: gram_H is not fixed by the base "
            "involution composed with transpose"
        )

    # involutivity on random elements
    for _ in range(20):
        e = random_element(component, rng)
        if rosati_apply(component, rosati_apply(component, e)) != e:
            raise InvalidInvolution(
                f"component {component.name}: applying the involution twice is "
                "not the identity"
            )

    ok, witness = check_positivity(component)
    if not ok:
        raise NonPositiveInvolution(
            f"component {component.name}: trace form is not positive definite "
            f"(leading principal minor {witness} is nonpositive)"
        )


def build_context(
    components: Sequence[WedderburnComponent],
    sqrt_deg_phi: Scalar = 1,
    seed: int = 7,
) -> VarietyContext:
    """Validate all component invariants and assemble a VarietyContext."""
    rng = random.Random(seed)
    for comp in components:
        _validate_component(comp, rng)
    return VarietyContext(components, sqrt_deg_phi)
