"""Shared context builders for the test suite."""

import random
from fractions import Fraction

import pytest

from abelreg import (
    AlgebraElement,
    FieldKind,
    InvolutionSpec,
    NumberField,
    Poly,
    Quat,
    QuaternionKind,
    SymmetricClass,
    WedderburnComponent,
    build_context,
)
from abelreg.wedderburn import random_element, symmetrize


def split_context(g, sqrt_deg_phi=1):
    """E^g with End = M_g(Q): one split factor, center Q, type I."""
    comp = WedderburnComponent(
        name="split",
        dim_g=1,
        mult_r=g,
        center=NumberField.rationals(),
        kind=FieldKind(),
        albert_type="I",
    )
    return build_context([comp], sqrt_deg_phi)


def split_class(ctx, entries):
    """Wrap a symmetric rational matrix as a class in a split context."""
    comp = ctx.components[0]
    matrix = tuple(
        tuple(comp.center.element(Fraction(v)) for v in row) for row in entries
    )
    return SymmetricClass.create(ctx, [AlgebraElement(comp, matrix)])


def random_symmetric_entries(rng, g, num_bound=20, den_bound=20):
    m = [[Fraction(0)] * g for _ in range(g)]
    for i in range(g):
        for j in range(i, g):
            v = Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))
            m[i][j] = m[j][i] = v
    return m


def rationals():
    return NumberField.rationals()


def real_quadratic(d=2):
    return NumberField(Poly([Fraction(-d), Fraction(0), Fraction(1)]))


def cm_quadratic(d=1):
    return NumberField(Poly([Fraction(d), Fraction(0), Fraction(1)]))


def field_component(name, dim_g, mult_r, center=None):
    return WedderburnComponent(
        name=name,
        dim_g=dim_g,
        mult_r=mult_r,
        center=center or rationals(),
        kind=FieldKind(),
        albert_type="I",
    )


def cm_component(name, dim_g, mult_r, d=1):
    center = cm_quadratic(d)
    return WedderburnComponent(
        name=name,
        dim_g=dim_g,
        mult_r=mult_r,
        center=center,
        kind=FieldKind(),
        albert_type="IV",
        involution=InvolutionSpec(
            base="field_conjugation",
            conj_gen_image=center.element([0, -1]),
        ),
    )


def quaternion_component(name, dim_g, mult_r, a, b, center=None, albert_type=None):
    """Quaternion factor with a positivity-compatible involution.

    Definite data (a, b < 0) carries the standard involution; indefinite
    data (a, b > 0) is twisted by s = k.
    """
    center = center or rationals()
    kind = QuaternionKind(center.element(a), center.element(b))
    if albert_type is None:
        albert_type = "III" if a < 0 else "II"
    if albert_type == "III":
        inv = InvolutionSpec(base="quaternion_standard")
    else:
        zero, one = center.element(0), center.element(1)
        inv = InvolutionSpec(
            base="quaternion_twisted", s=Quat(zero, zero, zero, one)
        )
    return WedderburnComponent(
        name=name,
        dim_g=dim_g,
        mult_r=mult_r,
        center=center,
        kind=kind,
        albert_type=albert_type,
        involution=inv,
    )


def random_symmetric_class(ctx, rng, bound=4):
    return symmetrize(
        ctx, [random_element(comp, rng, bound) for comp in ctx.components]
    )


@pytest.fixture
def rng():
    return random.Random(20260826)
