"""Continuous regularity search, weak indices and classification labels.

The regularity of a class gamma is the smallest integer m such that for
every i in {1..g} the twisted class (m-i)*id + gamma is either
degenerate or fails to have index i.  Both conditions are read off the
root locations of the degree-g pencil polynomial of gamma: twisting by
t*id shifts every root left by t, so the index of the twist is the
number of roots greater than t and the twist is degenerate exactly when
t is a root.

All roots lie within the Cauchy bound B of the pencil polynomial, so
the failing twists form a finite structure; the last failing integer
for each i is located by binary search on the monotone root-count
function rather than by a linear scan, which keeps the search
logarithmic in B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import ScanWindowExhausted
from .exactmath import Poly, cauchy_bound, count_roots_greater
from .riemannroch import BundleClass, pnrd_pencil
from .wedderburn import SymmetricClass, VarietyContext, class_add, class_scale

Scalar = Union[int, Fraction]


def weak_index(ctx: VarietyContext, alpha: SymmetricClass) -> int:
    """Positive-root count plus the multiplicity of 0; for nondegenerate
    classes this coincides with the index."""
    profile = pnrd_pencil(ctx, alpha).profile
    return profile.positive + profile.zero


@dataclass(frozen=True)
class Classification:
    chi: Fraction
    index_i: int
    dim_k: int
    weak_index_j: int
    label: str
    gv_note: Optional[str] = None
    branch_note: Optional[str] = None


def classify(ctx: VarietyContext, alpha: SymmetricClass) -> Classification:
    """Index-theorem label of a class from its pencil root profile."""
    data = pnrd_pencil(ctx, alpha)
    chi = ctx.sqrt_deg_phi * data.q(0)
    i = data.profile.positive
    dim_k = data.profile.zero
    j = i + dim_k
    if chi != 0:
        label = f"IT({i})"
        branch_note = None
    else:
        label = f"WIT({j})-generic"
        branch_note = (
            "weak index reported for the trivial-restriction branch; the "
            "numerically invisible alternative has all cohomology vanishing "
            "for particular translates"
        )
    gv_note = (
        "index 0: generic-vanishing behavior" if i == 0 else None
    )
    return Classification(
        chi=chi,
        index_i=i,
        dim_k=dim_k,
        weak_index_j=j,
        label=label,
        gv_note=gv_note,
        branch_note=branch_note,
    )


@dataclass(frozen=True)
class PredicateEntry:
    m: int
    i: int
    degenerate: bool
    positive_roots: int
    satisfied: bool


@dataclass(frozen=True)
class RegularityResult:
    m: int
    predicate_table: tuple[PredicateEntry, ...]
    scan_window: tuple[int, int]


class _TwistCounter:
    """Memoized root counting for integer twists of a fixed polynomial."""

    def __init__(self, q: Poly):
        self.q = q
        self._memo: dict[int, tuple[int, int]] = {}

    def counts(self, n: int) -> tuple[int, int]:
        """(roots of q greater than n, multiplicity of n as a root)."""
        if n not in self._memo:
            self._memo[n] = count_roots_greater(self.q, Fraction(n))
        return self._memo[n]

    def fails(self, m: int, g: int) -> bool:
        """True if some i in 1..g has a nondegenerate twist of index i."""
        for i in range(1, g + 1):
            greater, mult = self.counts(m - i)
            if mult == 0 and greater == i:
                return True
        return False


def _integer_roots_between(
    counter: _TwistCounter, lo: int, hi: int, out: list[int]
) -> None:
    """Collect the integer roots of q in (lo, hi] by divide and conquer
    on the (monotone) count of roots greater than n."""
    if counter.counts(lo)[0] == counter.counts(hi)[0]:
        return  # no roots at all in (lo, hi]
    if hi - lo == 1:
        if counter.counts(hi)[1] > 0:
            out.append(hi)
        return
    mid = (lo + hi) // 2
    _integer_roots_between(counter, lo, mid, out)
    _integer_roots_between(counter, mid, hi, out)


def _largest_with_count_at_least(counter: _TwistCounter, i: int, lo: int, hi: int) -> int:
    """Largest n with counter.counts(n)[0] >= i; requires it holds at lo
    and fails at hi."""
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if counter.counts(mid)[0] >= i:
            lo = mid
        else:
            hi = mid
    return lo


def _smallest_with_count_at_most(counter: _TwistCounter, i: int, lo: int, hi: int) -> int:
    """Smallest n with counter.counts(n)[0] <= i; requires failure at lo
    and success at hi."""
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if counter.counts(mid)[0] <= i:
            hi = mid
        else:
            lo = mid
    return hi


def reg_cont(ctx: VarietyContext, gamma: SymmetricClass) -> RegularityResult:
    """Smallest integer m for which every twist (m-i)*id + gamma, for
    i in {1..g}, is degenerate or fails to have index i."""
    g = ctx.g
    q = pnrd_pencil(ctx, gamma).q
    bound = cauchy_bound(q)
    lo = -(int(bound) + 2)  # counts(lo) = g, counts(hi) = 0
    hi = int(bound) + 2
    counter = _TwistCounter(q)

    integer_roots: list[int] = []
    _integer_roots_between(counter, lo, hi, integer_roots)
    integer_roots.sort()

    # The failing integers are the union over i of an interval of twists
    # (shifted by i) with holes at degenerate twists.  The answer is the
    # smallest non-failing integer, which is either just past the top of
    # one of those intervals or one of the holes.
    candidates = {hi + g + 1}
    for i in range(1, g + 1):
        top = _largest_with_count_at_least(counter, i, lo, hi)
        if counter.counts(top)[0] != i:
            continue  # count i is skipped at integer twists
        if counter.counts(lo)[0] <= i:
            bottom = lo  # i = g: the interval extends past every root
        else:
            bottom = _smallest_with_count_at_most(counter, i, lo, top)
        candidates.add(top + i + 1)
        for r in integer_roots:
            if bottom <= r <= top:
                candidates.add(r + i)

    viable = [m for m in sorted(candidates) if not counter.fails(m, g)]
    if not viable:
        raise ScanWindowExhausted(
            f"no admissible twist found in [{lo}, {hi + g + 1}]"
        )
    m_star = viable[0]

    table = []
    for m in (m_star - 1, m_star):
        for i in range(1, g + 1):
            greater, mult = counter.counts(m - i)
            table.append(
                PredicateEntry(
                    m=m,
                    i=i,
                    degenerate=mult > 0,
                    positive_roots=greater,
                    satisfied=mult > 0 or greater != i,
                )
            )
    return RegularityResult(
        m=m_star,
        predicate_table=tuple(table),
        scan_window=(lo, hi + g + 1),
    )


def reg_cont_bundle(ctx: VarietyContext, b: BundleClass) -> RegularityResult:
    """Regularity of a bundle datum; depends only on det/rank."""
    return reg_cont(ctx, b.gamma)


@dataclass(frozen=True)
class SweepPoint:
    s: Fraction
    result: Optional[RegularityResult]
    error: Optional[str] = None


def sweep(
    ctx: VarietyContext,
    gamma0: SymmetricClass,
    delta: SymmetricClass,
    grid: Sequence[Scalar],
) -> list[SweepPoint]:
    """Regularity along the ray gamma0 + s*delta, one point per grid value."""
    out = []
    for s in grid:
        s = Fraction(s)
        try:
            point = class_add(gamma0, class_scale(delta, s))
            out.append(SweepPoint(s=s, result=reg_cont(ctx, point)))
        except Exception as exc:  # per-point failures are reported, not fatal
            out.append(SweepPoint(s=s, result=None, error=str(exc)))
    return out
