"""Exact rational and number-field arithmetic substrate."""

from .numberfield import (
    FieldElement,
    NumberField,
    conjugate_product_descend,
    nf_norm,
    nf_trace,
)
from .polynomials import (
    Poly,
    RootProfile,
    cauchy_bound,
    count_roots_greater,
    lagrange_interpolate,
    poly_exact_sqrt,
    poly_gcd,
    rational_roots,
    sqrt_fraction,
    sturm_root_profile,
)

__all__ = [
    "FieldElement",
    "NumberField",
    "Poly",
    "RootProfile",
    "cauchy_bound",
    "conjugate_product_descend",
    "count_roots_greater",
    "lagrange_interpolate",
    "nf_norm",
    "nf_trace",
    "poly_exact_sqrt",
    "poly_gcd",
    "rational_roots",
    "sqrt_fraction",
    "sturm_root_profile",
]
