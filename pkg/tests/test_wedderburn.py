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
from abelreg.errors import (
    AlgebraDataError,
    InvalidInvolution,
    NonIntegralExponent,
    NonPositiveInvolution,
    TypeConstraintViolation,
)
from abelreg.wedderburn import (
    random_element,
    reduced_charpoly,
    rosati_apply,
    symmetrize,
)

from conftest import (
    cm_component,
    field_component,
    quaternion_component,
    real_quadratic,
    split_context,
)


def hamilton_kind():
    Q = NumberField.rationals()
    return QuaternionKind(Q.element(-1), Q.element(-1))


def test_quaternion_multiplication_table():
    K = hamilton_kind()
    Q = NumberField.rationals()
    z, o = Q.element(0), Q.element(1)
    i = Quat(z, o, z, z)
    j = Quat(z, z, o, z)
    k = Quat(z, z, z, o)
    assert K.mul(i, i) == Quat(Q.element(-1), z, z, z)
    assert K.mul(i, j) == k
    assert K.mul(j, i) == Quat(z, z, z, Q.element(-1))
    assert K.mul(j, k) == i
    assert K.mul(k, i) == j


def test_quaternion_nrd_is_multiplicative():
    rng = random.Random(31)
    K = hamilton_kind()
    Q = NumberField.rationals()

    def rand():
        return Quat(*(Q.element(rng.randint(-5, 5)) for _ in range(4)))

    for _ in range(30):
        p, q = rand(), rand()
        assert K.nrd(K.mul(p, q)) == K.nrd(p) * K.nrd(q)


def test_quaternion_inverse():
    rng = random.Random(32)
    Q = NumberField.rationals()
    K = QuaternionKind(Q.element(2), Q.element(-5))
    one = Quat(Q.element(1), Q.element(0), Q.element(0), Q.element(0))
    for _ in range(20):
        q = Quat(*(Q.element(rng.randint(-4, 4)) for _ in range(4)))
        if K.nrd(q).is_zero:
            continue
        assert K.mul(q, K.inv(q)) == one


def test_regular_rep_is_left_multiplication():
    rng = random.Random(33)
    Q = NumberField.rationals()
    K = QuaternionKind(Q.element(2), Q.element(3))
    z, o = Q.element(0), Q.element(1)
    basis = [Quat(o, z, z, z), Quat(z, o, z, z), Quat(z, z, o, z), Quat(z, z, z, o)]
    for _ in range(15):
        q = Quat(*(Q.element(rng.randint(-4, 4)) for _ in range(4)))
        rep = K.regular_rep(q)
        for col, b in enumerate(basis):
            prod = K.mul(q, b)
            coords = [prod.x, prod.y, prod.z, prod.w]
            assert [rep[row][col] for row in range(4)] == coords


def test_exponent_integrality_enforced():
    # type IV over a CM field needs 2g/t integral: g=1, t=4 fails
    K = NumberField(Poly([Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(1)]))
    comp = WedderburnComponent(
        name="bad", dim_g=1, mult_r=1, center=K, kind=FieldKind(),
        albert_type="IV",
        involution=InvolutionSpec(base="field_conjugation", conj_gen_image=-K.gen()),
    )
    with pytest.raises(NonIntegralExponent):
        build_context([comp])


def test_type_constraints_enforced():
    # type I demands a totally real center
    gauss = NumberField(Poly([Fraction(1), Fraction(0), Fraction(1)]))
    comp = WedderburnComponent(
        name="bad", dim_g=1, mult_r=1, center=gauss, kind=FieldKind(), albert_type="I",
    )
    with pytest.raises(TypeConstraintViolation):
        build_context([comp])


def test_involution_base_compatibility():
    comp = WedderburnComponent(
        name="bad", dim_g=1, mult_r=1, center=NumberField.rationals(),
        kind=FieldKind(), albert_type="I",
        involution=InvolutionSpec(base="quaternion_standard"),
    )
    with pytest.raises(InvalidInvolution):
        build_context([comp])


def test_positivity_rejects_wrong_involution():
    # the standard involution on an indefinite quaternion algebra is not
    # positive; validation must refuse it
    Q = NumberField.rationals()
    comp = WedderburnComponent(
        name="bad", dim_g=2, mult_r=1, center=Q,
        kind=QuaternionKind(Q.element(2), Q.element(3)),
        albert_type="II",
        involution=InvolutionSpec(base="quaternion_standard"),
    )
    with pytest.raises(NonPositiveInvolution):
        build_context([comp])


def test_rosati_is_an_involution():
    rng = random.Random(34)
    contexts = [
        split_context(3),
        build_context([field_component("rq", 2, 2, real_quadratic())]),
        build_context([cm_component("cm", 1, 2)]),
        build_context([quaternion_component("h", 2, 2, -1, -1)]),
        build_context([quaternion_component("b", 2, 1, 2, 3)]),
    ]
    for ctx in contexts:
        for comp in ctx.components:
            for _ in range(10):
                e = random_element(comp, rng, 4)
                twice = rosati_apply(comp, rosati_apply(comp, e))
                assert twice == e


def test_symmetrize_lands_in_fixed_space():
    rng = random.Random(35)
    ctx = build_context([quaternion_component("h", 2, 2, -1, -2)])
    for _ in range(10):
        alpha = symmetrize(ctx, [random_element(ctx.components[0], rng, 3)])
        assert isinstance(alpha, SymmetricClass)  # .create validated fixedness


def test_symmetric_class_rejects_unfixed():
    ctx = split_context(2)
    comp = ctx.components[0]
    Q = comp.center
    asym = (
        (Q.element(0), Q.element(1)),
        (Q.element(0), Q.element(0)),
    )
    with pytest.raises(AlgebraDataError):
        SymmetricClass.create(ctx, [AlgebraElement(comp, asym)])


def test_reduced_charpoly_split_diagonal():
    ctx = split_context(2)
    comp = ctx.components[0]
    Q = comp.center
    m = ((Q.element(0), Q.element(0)), (Q.element(0), Q.element(1)))
    coeffs = reduced_charpoly(comp, AlgebraElement(comp, m))
    assert [c.as_rational() for c in coeffs] == [0, 1, 1]  # N^2 + N


def test_reduced_charpoly_hamilton_example():
    comp = quaternion_component("h", 2, 1, -1, -1)
    build_context([comp])
    Q = comp.center
    one = Q.element(1)
    q = Quat(one, one, one, one)
    coeffs = reduced_charpoly(comp, AlgebraElement(comp, ((q,),)))
    assert [c.as_rational() for c in coeffs] == [4, 2, 1]  # N^2 + 2N + 4


def test_reduced_charpoly_respects_trd():
    # the subleading coefficient of the reduced charpoly of N*I + M is
    # the reduced trace of M
    rng = random.Random(36)
    comp = quaternion_component("h", 2, 2, -2, -3)
    build_context([comp])
    for _ in range(10):
        e = random_element(comp, rng, 3)
        coeffs = reduced_charpoly(comp, e)
        trace = comp.center.zero()
        for idx in range(comp.mult_r):
            trace = trace + comp.trd_entry(e.matrix[idx][idx])
        assert coeffs[-2] == trace


def test_duplicate_component_names_rejected():
    a = field_component("x", 1, 1)
    b = field_component("x", 1, 2)
    with pytest.raises(AlgebraDataError):
        build_context([a, b])
