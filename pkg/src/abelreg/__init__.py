"""Exact arithmetic for Riemann-Roch, index and continuous regularity of
symmetric classes on abelian varieties with prescribed endomorphism data."""

from .errors import (
    AlgebraDataError,
    ComputationError,
    ContextMismatch,
    InvalidInvolution,
    NonIntegralExponent,
    NonPositiveInvolution,
    NonRealRoots,
    NotAPerfectSquare,
    ScanWindowExhausted,
    SquareExtractionFailed,
    TypeConstraintViolation,
)
from .exactmath import NumberField, Poly, RootProfile
from .wedderburn import (
    AlgebraElement,
    FieldKind,
    InvolutionSpec,
    Quat,
    QuaternionKind,
    SymmetricClass,
    VarietyContext,
    WedderburnComponent,
    build_context,
    class_add,
    class_scale,
    class_shift,
    identity_class,
    rosati_apply,
    scalar_class,
    symmetrize,
    zero_class,
)
from .riemannroch import (
    BundleClass,
    BundleInvariants,
    HilbertData,
    VanishingRanges,
    bundle_invariants,
    euler_char,
    index,
    pnrd_eval,
    pnrd_pencil,
    vanishing_ranges,
)
from .regularity import (
    Classification,
    RegularityResult,
    SweepPoint,
    classify,
    reg_cont,
    reg_cont_bundle,
    sweep,
    weak_index,
)
from .oracle import (
    gershgorin_window,
    oracle_chi,
    oracle_inertia,
    oracle_regcont,
)

__all__ = [name for name in dir() if not name.startswith("_")]
