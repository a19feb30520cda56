"""Brute-force referee computations for the split model, where the
endomorphism data is a single matrix factor over Q and a class is just
a symmetric rational matrix.

In that model the Euler characteristic is the determinant, the index is
the number of negative eigenvalues, and the kernel dimension is the
nullity.  Everything here is computed by textbook elimination and
shares no code with the pencil-polynomial route it referees.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .errors import AlgebraDataError, ScanWindowExhausted

Scalar = Union[int, Fraction]
Matrix = list[list[Fraction]]


def as_sym_matrix(entries: Sequence[Sequence[Scalar]]) -> Matrix:
    m = [[Fraction(v) for v in row] for row in entries]
    n = len(m)
    if any(len(row) != n for row in m):
        raise AlgebraDataError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise AlgebraDataError(f"matrix is not symmetric at ({i},{j})")
    return m


def oracle_chi(entries: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant by fraction-free Bareiss elimination."""
    m = as_sym_matrix(entries)
    n = len(m)
    if n == 0:
        return Fraction(1)
    denom_lcm = 1
    for row in m:
        for v in row:
            denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
    a = [[int(v * denom_lcm) for v in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], denom_lcm**n)


def oracle_inertia(entries: Sequence[Sequence[Scalar]]) -> tuple[int, int, int]:
    """(n_plus, n_zero, n_minus) by exact congruence diagonalization."""
    m = as_sym_matrix(entries)
    n = len(m)
    n_plus = n_minus = n_zero = 0
    for k in range(n):
        if m[k][k] == 0:
            # look for a pivot on the diagonal first, then repair via a
            # symmetric row+column addition
            piv = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if piv is not None:
                m[k], m[piv] = m[piv], m[k]
                for row in m:
                    row[k], row[piv] = row[piv], row[k]
            else:
                off = next(
                    (j for j in range(k + 1, n) if m[k][j] != 0), None
                )
                if off is None:
                    n_zero += 1
                    continue
                # with zero diagonal, adding row/col `off` gives 2*m[k][off]
                for j in range(k, n):
                    m[k][j] += m[off][j]
                for i in range(k, n):
                    m[i][k] += m[i][off]
        pivot = m[k][k]
        if pivot == 0:
            n_zero += 1
            continue
        if pivot > 0:
            n_plus += 1
        else:
            n_minus += 1
        # row operations alone realize the congruence on the trailing
        # block: the column corrections vanish against the zeroed entries
        for i in range(k + 1, n):
            if m[i][k] == 0:
                continue
            f = m[i][k] / pivot
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return n_plus, n_zero, n_minus


def _shifted(m: Matrix, t: Scalar) -> Matrix:
    return [
        [m[i][j] + t if i == j else m[i][j] for j in range(len(m))]
        for i in range(len(m))
    ]


def oracle_regcont(
    entries: Sequence[Sequence[Scalar]], window: tuple[int, int]
) -> int:
    """Direct enumeration of the regularity predicate over a window.

    The class (m-i)*I + M is degenerate when the determinant vanishes and
    has index i when M + (m-i)*I has i negative eigenvalues; the window
    must contain the transition region.
    """
    m = as_sym_matrix(entries)
    g = len(m)
    lo, hi = window
    for cand in range(lo, hi + 1):
        ok = True
        # descending: candidates far below the transition fail at i = g
        # immediately, so the scan spends one inertia call on each
        for i in range(g, 0, -1):
            shifted = _shifted(m, cand - i)
            _, n_zero, n_minus = oracle_inertia(shifted)
            if n_zero == 0 and n_minus == i:
                ok = False
                break
        if ok:
            return cand
    raise ScanWindowExhausted(f"no admissible twist in [{lo}, {hi}]")


def gershgorin_window(entries: Sequence[Sequence[Scalar]]) -> tuple[int, int]:
    """A window certain to contain the regularity transition: eigenvalues
    lie within the maximal absolute row sum R, so every integer below
    g - R fails and every integer above R + g succeeds."""
    m = as_sym_matrix(entries)
    g = len(m)
    radius = max(
        (sum(abs(v) for v in row) for row in m), default=Fraction(0)
    )
    r_int = int(radius) + 1
    return g - r_int - 1, r_int + g + 1
