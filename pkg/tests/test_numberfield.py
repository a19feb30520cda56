import random
from fractions import Fraction

import pytest

from abelreg.errors import AlgebraDataError
from abelreg.exactmath import (
    NumberField,
    Poly,
    conjugate_product_descend,
    nf_norm,
    nf_trace,
)


def F(*coeffs):
    return [Fraction(c) for c in coeffs]


def sqrt2_field():
    return NumberField(Poly(F(-2, 0, 1)))


def gaussian_field():
    return NumberField(Poly(F(1, 0, 1)))


def test_rejects_bad_minimal_polynomials():
    with pytest.raises(AlgebraDataError):
        NumberField(Poly(F(-2, 0, 2)))  # not monic
    with pytest.raises(AlgebraDataError):
        NumberField(Poly(F(-1, 0, 1)))  # x^2 - 1 has rational roots
    with pytest.raises(AlgebraDataError):
        NumberField(Poly(F(0, 0, 1)))  # x^2 is not squarefree


def test_field_axioms_randomized():
    rng = random.Random(21)
    K = sqrt2_field()
    for _ in range(40):
        a = K.element([Fraction(rng.randint(-9, 9)) for _ in range(2)])
        b = K.element([Fraction(rng.randint(-9, 9)) for _ in range(2)])
        c = K.element([Fraction(rng.randint(-9, 9)) for _ in range(2)])
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        if not b.is_zero:
            assert (a / b) * b == a


def test_generator_satisfies_minimal_polynomial():
    K = sqrt2_field()
    s = K.gen()
    assert s * s == K.element(2)


def test_inverse_round_trip():
    rng = random.Random(22)
    K = gaussian_field()
    for _ in range(30):
        a = K.element([Fraction(rng.randint(-9, 9)) for _ in range(2)])
        if a.is_zero:
            continue
        assert a * a.inverse() == K.one()


def test_norm_and_trace_quadratic():
    K = sqrt2_field()
    # a + b*sqrt2 has norm a^2 - 2 b^2 and trace 2a
    rng = random.Random(23)
    for _ in range(20):
        a, b = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
        e = K.element([a, b])
        assert nf_norm(e) == a * a - 2 * b * b
        assert nf_trace(e) == 2 * a


def test_norm_is_multiplicative():
    rng = random.Random(24)
    K = gaussian_field()
    for _ in range(25):
        a = K.element([Fraction(rng.randint(-6, 6)) for _ in range(2)])
        b = K.element([Fraction(rng.randint(-6, 6)) for _ in range(2)])
        assert nf_norm(a * b) == nf_norm(a) * nf_norm(b)


def test_rationals_degenerate_field():
    Q = NumberField.rationals()
    e = Q.element(Fraction(7, 3))
    assert e.as_rational() == Fraction(7, 3)
    assert nf_norm(e) == Fraction(7, 3)
    assert nf_trace(e) == Fraction(7, 3)


def test_conjugate_product_descend_quadratic():
    # the descent of (x + (1 + sqrt2)) is (x + 1)^2 - 2 = x^2 + 2x - 1
    K = sqrt2_field()
    p = conjugate_product_descend([K.element([1, 1]), K.one()], K)
    assert p == Poly(F(-1, 2, 1))


def test_conjugate_product_descend_rational_coeffs():
    # rational coefficients descend by plain squaring (t = 2 embeddings)
    K = gaussian_field()
    p = conjugate_product_descend([K.element(3), K.one()], K)
    assert p == Poly(F(9, 6, 1))


def test_descend_matches_norm_at_points():
    rng = random.Random(25)
    K = sqrt2_field()
    coeffs = [
        K.element([Fraction(rng.randint(-5, 5)) for _ in range(2)]),
        K.element([Fraction(rng.randint(-5, 5)) for _ in range(2)]),
        K.one(),
    ]
    p = conjugate_product_descend(coeffs, K)
    assert p.degree == 4
    for x in range(-3, 4):
        value = K.zero()
        for d, c in enumerate(coeffs):
            value = value + c * K.element(Fraction(x) ** d)
        assert p(Fraction(x)) == nf_norm(value)
