"""Enumeration and counting of the minimal coefficient set.

Ordered members are built recursively: the all-or-nothing base vector
(1,0,...,0), then for every nonzero count zeta >= 2 a full-support vector of
dimension zeta padded with zeros.  A full-support vector grows by prepending a
new leading component equal to (tail sum)/t for an integer t between 1 and
theta_prev + 1, where theta_prev encoded the previous leading component.

Output order is fixed: zeta ascending, then the stored theta-sequence
lexicographically descending, which the recursion emits naturally when t runs
downward.  Counting walks the same theta chains as a DP without materializing
any vectors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from .errors import ResourceLimitError
from .resolution import LambdaVector

MAX_ENUM_L = 14
MAX_EXPAND_L = 7


def _full_support(components: tuple[Fraction, ...], total: Fraction,
                  theta_last: int, remaining: int) -> Iterator[tuple[Fraction, ...]]:
    if remaining == 0:
        yield components
        return
    for t in range(theta_last + 1, 0, -1):
        yield from _full_support((total / t,) + components, total + total / t, t,
                                 remaining - 1)


def iter_ordered(L: int) -> Iterator[LambdaVector]:
    """Stream the ordered members for L levels in canonical order.

    Memory stays O(L): each zeta block is a depth-first walk of the recursion
    tree, so large L never holds the full (super-exponential) set at once.
    """
    if not 1 <= L <= MAX_ENUM_L:
        raise ResourceLimitError(f"enumeration limited to 1 <= L <= {MAX_ENUM_L}")
    one = Fraction(1)
    for zeta in range(1, L + 1):
        pad = (Fraction(0),) * (L - zeta)
        for comps in _full_support((one,), one, 0, zeta - 1):
            yield LambdaVector(comps + pad)


@lru_cache(maxsize=None)
def _ordered_cached(L: int) -> tuple[LambdaVector, ...]:
    return tuple(iter_ordered(L))


def generate_ordered(L: int) -> list[LambdaVector]:
    """All ordered members as a list (cached for small L)."""
    if L <= 10:
        return list(_ordered_cached(L))
    return list(iter_ordered(L))


def _distinct_permutations(values: tuple[Fraction, ...]) -> Iterator[tuple[Fraction, ...]]:
    """Distinct permutations of a multiset, ascending lexicographic."""
    pool = sorted(values)
    n = len(pool)

    def rec(remaining: list[Fraction], prefix: tuple[Fraction, ...]):
        if len(prefix) == n:
            yield prefix
            return
        seen = None
        for i, v in enumerate(remaining):
            if seen is not None and v == seen:
                continue
            seen = v
            yield from rec(remaining[:i] + remaining[i + 1:], prefix + (v,))

    yield from rec(pool, ())


def expand_permutations(g0) -> list[LambdaVector]:
    """Permutation closure of a list of ordered members, duplicates removed.

    Per-member blocks keep the input order; within a block permutations are
    ascending lexicographic, so indexes are stable.
    """
    out: list[LambdaVector] = []
    for lv in g0:
        lv = LambdaVector.coerce(lv)
        if lv.L > MAX_EXPAND_L:
            raise ResourceLimitError(
                f"permutation closure limited to L <= {MAX_EXPAND_L}")
        out.extend(LambdaVector(p) for p in _distinct_permutations(lv.components))
    return out


def theta_chain_counts(L: int) -> list[int]:
    """Block sizes D_1..D_L of the enumeration, via the theta-chain DP.

    D_k counts chains (theta_{zeta}=0, then k-1 steps with 1 <= theta' <=
    theta+1); D_1 is the single-nonzero vector.  No vectors are materialized.
    Empirically the D_k match the Catalan numbers; only the DP is relied on.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    counts = [1]
    # states[t] = number of partial chains currently ending at theta = t
    states = {0: 1}
    for _ in range(2, L + 1):
        nxt: dict[int, int] = {}
        for t, c in states.items():
            for t2 in range(1, t + 2):
                nxt[t2] = nxt.get(t2, 0) + c
        states = nxt
        counts.append(sum(states.values()))
    return counts


def count_ordered(L: int) -> int:
    """Number of ordered members, counted without enumeration."""
    return sum(theta_chain_counts(L))


def check_bounds(L: int) -> tuple[int, int, int]:
    """(2^(L-1), count, L!) with the sandwich verified.

    Both bounds are strict for L >= 4 and that is asserted here.  The lower
    bound is attained at L <= 3 (counts 1, 2, 4 against 1, 2, 4), so no strict
    claim is made there despite the count already exceeding neither bound.
    """
    lower = 1 << (L - 1)
    upper = factorial(L)
    count = count_ordered(L)
    if not lower <= count <= upper:
        raise AssertionError(f"count bound violated at L={L}: {lower}, {count}, {upper}")
    if L >= 4 and not lower < count < upper:
        raise AssertionError(f"strict count bound violated at L={L}")
    return lower, count, upper


def is_member(lam) -> bool:
    """Membership in the permutation-closed coefficient set."""
    return LambdaVector.coerce(lam).theta_seq is not None
