"""Euler characteristics, Hilbert polynomials, indices and vanishing
ranges of symmetric classes, plus the rank-r bundle wrappers.

The central computation forms, per component, the reduced
characteristic polynomial of the pencil N*I + block, descends it to Q
by the conjugate product over the center's embeddings, raises it to the
component exponent, and extracts the exact square root of the product.
The result is a monic polynomial of degree g whose value at 0 is the
normalized reduced norm of the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import NonRealRoots, NotAPerfectSquare, SquareExtractionFailed
from .exactmath import (
    Poly,
    RootProfile,
    conjugate_product_descend,
    poly_exact_sqrt,
    sturm_root_profile,
)
from .wedderburn import (
    SymmetricClass,
    VarietyContext,
    class_scale,
    reduced_charpoly,
)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class HilbertData:
    """The monic degree-g pencil polynomial, its scaled form and root profile."""

    q: Poly
    scaled: Poly
    profile: RootProfile


def pnrd_pencil(ctx: VarietyContext, alpha: SymmetricClass) -> HilbertData:
    """Monic degree-g polynomial q with q(N) the normalized reduced norm
    of N*id + alpha, together with sqrt_deg_phi * q and its root profile."""
    if alpha.context is not ctx:
        raise NotAPerfectSquare("class does not belong to the given context")
    product = Poly.constant(1)
    for comp, block in zip(ctx.components, alpha.blocks):
        try:
            over_center = reduced_charpoly(comp, block)
        except SquareExtractionFailed as exc:
            raise NotAPerfectSquare(
                f"component {comp.name}: {exc}"
            ) from exc
        descended = conjugate_product_descend(over_center, comp.center)
        product = product * descended**comp.exponent
    if product.degree != 2 * ctx.g:
        raise NotAPerfectSquare(
            f"pencil product has degree {product.degree}, expected {2 * ctx.g}"
        )
    q = poly_exact_sqrt(product)
    if q is None:
        raise NotAPerfectSquare(
            "product of descended reduced norms is not a polynomial square; "
            "the class is not symmetric or the algebra data is invalid"
        )
    profile = sturm_root_profile(q)
    if profile.total_real != ctx.g:
        raise NonRealRoots(
            f"pencil polynomial has {profile.total_real} real roots, "
            f"expected {ctx.g}; the input data is inconsistent"
        )
    return HilbertData(q=q, scaled=q * ctx.sqrt_deg_phi, profile=profile)


def pnrd_eval(ctx: VarietyContext, alpha: SymmetricClass) -> Fraction:
    """Value at 0 of the pencil square root.

    Defined through the polynomial square root rather than a pointwise
    numeric square root, which fixes the overall sign."""
    return pnrd_pencil(ctx, alpha).q(0)


def euler_char(ctx: VarietyContext, alpha: SymmetricClass) -> Fraction:
    return ctx.sqrt_deg_phi * pnrd_eval(ctx, alpha)


def index(ctx: VarietyContext, alpha: SymmetricClass) -> RootProfile:
    """Root profile of the pencil polynomial: positive count is the index,
    zero multiplicity is the kernel dimension."""
    return pnrd_pencil(ctx, alpha).profile


@dataclass(frozen=True)
class VanishingRanges:
    """Cohomology degrees forced to vanish by the root counts."""

    vanish_low: frozenset[int]
    vanish_high: frozenset[int]


def vanishing_ranges(ctx: VarietyContext, alpha: SymmetricClass) -> VanishingRanges:
    profile = index(ctx, alpha)
    g = ctx.g
    return VanishingRanges(
        vanish_low=frozenset(range(profile.positive)),
        vanish_high=frozenset(g - j for j in range(profile.negative)),
    )


@dataclass(frozen=True)
class BundleClass:
    """A rank-r bundle datum: the class of its determinant and the
    rational class det/rank."""

    det_class: SymmetricClass
    rank: int
    gamma: SymmetricClass

    @staticmethod
    def create(det_class: SymmetricClass, rank: int) -> "BundleClass":
        if rank < 1:
            raise ValueError("rank must be a positive integer")
        return BundleClass(
            det_class=det_class,
            rank=rank,
            gamma=class_scale(det_class, Fraction(1, rank)),
        )


@dataclass(frozen=True)
class BundleInvariants:
    chi_bundle: Fraction
    index_bundle: int
    dimk_bundle: int
    ordk: Optional[Fraction]


def bundle_invariants(ctx: VarietyContext, b: BundleClass) -> BundleInvariants:
    """Euler characteristic, index, kernel dimension and kernel order of a
    rank-r bundle, all read off the determinant class."""
    g = ctx.g
    data = pnrd_pencil(ctx, b.det_class)
    chi_det = ctx.sqrt_deg_phi * data.q(0)
    chi = chi_det / Fraction(b.rank) ** (g - 1)
    return BundleInvariants(
        chi_bundle=chi,
        index_bundle=data.profile.positive,
        dimk_bundle=data.profile.zero,
        ordk=chi * chi if chi != 0 else None,
    )
