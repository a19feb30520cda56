import random
from fractions import Fraction

import pytest

from abelreg.errors import AlgebraDataError
from abelreg.oracle import (
    gershgorin_window,
    oracle_chi,
    oracle_inertia,
    oracle_regcont,
)

from conftest import random_symmetric_entries


def test_rejects_non_symmetric_input():
    with pytest.raises(AlgebraDataError):
        oracle_chi([[0, 1], [0, 0]])
    with pytest.raises(AlgebraDataError):
        oracle_inertia([[0, 1, 2], [1, 0, 3]])


def test_chi_known_determinants():
    assert oracle_chi([[Fraction(2)]]) == 2
    assert oracle_chi([[1, 2], [2, 1]]) == -3
    assert oracle_chi([[0, 0], [0, 1]]) == 0
    assert oracle_chi([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_chi_matches_cofactor_expansion():
    rng = random.Random(61)
    for _ in range(30):
        g = rng.randint(1, 4)
        m = random_symmetric_entries(rng, g, 9, 5)
        assert oracle_chi(m) == _det_cofactor(m)


def _det_cofactor(m):
    n = len(m)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * Fraction(m[0][j]) * _det_cofactor(minor)
    return total


def test_inertia_diagonal():
    n_plus, n_zero, n_minus = oracle_inertia(
        [[3, 0, 0], [0, 0, 0], [0, 0, -2]]
    )
    assert (n_plus, n_zero, n_minus) == (1, 1, 1)


def test_inertia_zero_diagonal_pivot():
    # hyperbolic plane: signature (1, 1)
    n_plus, n_zero, n_minus = oracle_inertia([[0, 1], [1, 0]])
    assert (n_plus, n_zero, n_minus) == (1, 0, 1)


def test_inertia_counts_sum_and_determinant_sign():
    rng = random.Random(62)
    for _ in range(40):
        g = rng.randint(1, 5)
        m = random_symmetric_entries(rng, g, 9, 5)
        n_plus, n_zero, n_minus = oracle_inertia(m)
        assert n_plus + n_zero + n_minus == g
        det = oracle_chi(m)
        if n_zero > 0:
            assert det == 0
        else:
            assert (det > 0) == (n_minus % 2 == 0)


def test_inertia_congruence_invariance():
    # A and C^T A C have the same signature for invertible C
    rng = random.Random(63)
    for _ in range(15):
        g = rng.randint(2, 4)
        a = random_symmetric_entries(rng, g, 6, 3)
        c = [[Fraction(rng.randint(-3, 3)) for _ in range(g)] for _ in range(g)]
        if _det_cofactor_sq(c) == 0:
            continue
        cac = _mul(_mul(_transpose(c), a), c)
        assert oracle_inertia(a) == oracle_inertia(cac)


def _transpose(m):
    return [list(col) for col in zip(*m)]


def _mul(a, b):
    n = len(a)
    return [
        [sum(Fraction(a[i][k]) * Fraction(b[k][j]) for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _det_cofactor_sq(m):
    return _det_cofactor(m)


def test_regcont_zero_and_identity():
    for g in (1, 2, 3):
        zero = [[Fraction(0)] * g for _ in range(g)]
        ident = [
            [Fraction(1) if i == j else Fraction(0) for j in range(g)]
            for i in range(g)
        ]
        assert oracle_regcont(zero, gershgorin_window(zero)) == g
        assert oracle_regcont(ident, gershgorin_window(ident)) == g - 1


def test_regcont_golden():
    m = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert oracle_regcont(m, gershgorin_window(m)) == 1


def test_gershgorin_window_brackets_the_answer():
    rng = random.Random(64)
    for _ in range(15):
        g = rng.randint(1, 4)
        m = random_symmetric_entries(rng, g, 9, 3)
        lo, hi = gershgorin_window(m)
        assert lo <= oracle_regcont(m, (lo, hi)) <= hi
