import random
from fractions import Fraction

import pytest

from abelreg import (
    AlgebraElement,
    BundleClass,
    SymmetricClass,
    bundle_invariants,
    build_context,
    class_scale,
    class_shift,
    euler_char,
    identity_class,
    pnrd_eval,
    pnrd_pencil,
    scalar_class,
    vanishing_ranges,
    zero_class,
)
from abelreg.errors import NotAPerfectSquare

from conftest import (
    cm_component,
    field_component,
    quaternion_component,
    random_symmetric_class,
    random_symmetric_entries,
    real_quadratic,
    split_class,
    split_context,
)


def test_split_pencil_is_characteristic_polynomial():
    # in the split model the pencil is det(N*I + M)
    rng = random.Random(41)
    for _ in range(10):
        g = rng.randint(1, 4)
        ctx = split_context(g)
        entries = random_symmetric_entries(rng, g, 9, 4)
        alpha = split_class(ctx, entries)
        data = pnrd_pencil(ctx, alpha)
        assert data.q.degree == g
        # eigenvalue shift: q(t) = det(t*I + M)
        for t in range(-2, 3):
            shifted = [
                [entries[i][j] + (t if i == j else 0) for j in range(g)]
                for i in range(g)
            ]
            assert data.q(Fraction(t)) == _det(shifted)


def _det(rows):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return sign * det


def test_normalization_identity():
    for g in (1, 2, 3, 5):
        ctx = split_context(g)
        assert pnrd_eval(ctx, identity_class(ctx)) == 1


def test_zero_class_pencil():
    ctx = split_context(3)
    data = pnrd_pencil(ctx, zero_class(ctx))
    assert data.q.coeffs == (Fraction(0),) * 3 + (Fraction(1),)  # N^3


def test_euler_char_scales_with_sqrt_deg_phi():
    rng = random.Random(42)
    entries = random_symmetric_entries(rng, 3, 9, 4)
    plain = split_context(3)
    scaled = split_context(3, sqrt_deg_phi=Fraction(5, 2))
    a = split_class(plain, entries)
    b = split_class(scaled, entries)
    assert euler_char(scaled, b) == Fraction(5, 2) * euler_char(plain, a)


def test_homogeneity_of_euler_char():
    # chi(n * alpha) = n^g * chi(alpha)
    rng = random.Random(43)
    ctx = split_context(3)
    alpha = split_class(ctx, random_symmetric_entries(rng, 3, 9, 4))
    chi = euler_char(ctx, alpha)
    for n in (2, 3, Fraction(1, 2)):
        assert euler_char(ctx, class_scale(alpha, n)) == Fraction(n) ** 3 * chi


def test_index_and_vanishing_ranges():
    ctx = split_context(3)
    # eigenvalues 2, -1, -3: pencil roots -2, 1, 3 => i = 2, neg = 1
    alpha = split_class(ctx, [[2, 0, 0], [0, -1, 0], [0, 0, -3]])
    data = pnrd_pencil(ctx, alpha)
    assert (data.profile.positive, data.profile.zero, data.profile.negative) == (2, 0, 1)
    ranges = vanishing_ranges(ctx, alpha)
    assert ranges.vanish_low == frozenset({0, 1})
    assert ranges.vanish_high == frozenset({3})


def test_quaternion_pencil_is_square_and_real():
    rng = random.Random(44)
    ctx = build_context([quaternion_component("h", 2, 2, -1, -1)])
    for _ in range(15):
        alpha = random_symmetric_class(ctx, rng, 3)
        data = pnrd_pencil(ctx, alpha)
        assert data.q.degree == ctx.g
        assert data.profile.total_real == ctx.g


def test_real_quadratic_pencil():
    ctx = build_context([field_component("rq", 2, 1, real_quadratic())])
    comp = ctx.components[0]
    K = comp.center
    alpha = SymmetricClass.create(
        ctx, [AlgebraElement(comp, ((K.element([1, 1]),),))]
    )
    data = pnrd_pencil(ctx, alpha)
    # norm of (N + 1 + sqrt2) is N^2 + 2N - 1
    assert data.q.coeffs == (Fraction(-1), Fraction(2), Fraction(1))


def test_mukai_bundle_formulas():
    rng = random.Random(45)
    for _ in range(20):
        g = rng.randint(1, 4)
        ctx = split_context(g)
        det = split_class(ctx, random_symmetric_entries(rng, g, 9, 4))
        r = rng.randint(1, 4)
        inv = bundle_invariants(ctx, BundleClass.create(det, r))
        assert inv.chi_bundle * Fraction(r) ** (g - 1) == euler_char(ctx, det)
        if inv.chi_bundle != 0:
            assert inv.ordk == inv.chi_bundle**2
        else:
            assert inv.ordk is None


def test_bundle_index_is_that_of_det():
    ctx = split_context(2)
    det = split_class(ctx, [[-3, 0], [0, -5]])
    inv = bundle_invariants(ctx, BundleClass.create(det, 3))
    assert inv.index_bundle == 2
    assert inv.dimk_bundle == 0


def test_shift_coherence():
    rng = random.Random(46)
    ctx = split_context(3)
    for _ in range(10):
        alpha = split_class(ctx, random_symmetric_entries(rng, 3, 9, 4))
        q = pnrd_pencil(ctx, alpha).q
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        assert pnrd_eval(ctx, class_shift(alpha, t)) == q(t)
