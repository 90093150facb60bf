"""Fourier-Motzkin cross-check of the region.

Projects the per-level allocation system onto the (rates, entropies) space by
eliminating all L^2 allocation variables, keeping the entropy profile as
formal nonnegative parameter columns.  Every surviving row then reads

    lambda . R - f . H >= 0,

directly comparable with the generated inequality set.

Row bookkeeping during elimination: canonical integer scaling with exact
dedup, the Imbert/Chernikov ancestor-count cutoff, and pairwise domination
pruning (sound here because the projection is only ever used over the
nonnegative orthant and the allocation variables keep their nonnegativity
rows until eliminated).  The final projected system is made irredundant by
exact LP, one implication test per row.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import ResourceLimitError
from .lp import LinearProgram, Relation, Sense, Status, solve
from .region import Inequality
from .resolution import LambdaVector

MAX_FM_LEVELS = 4


def _primitive(row: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for a in row:
        g = gcd(g, a)
    if g > 1:
        return tuple(a // g for a in row)
    return row


def _project_allocation_system(L: int) -> list[tuple[int, ...]]:
    """Eliminate the L^2 allocation columns; returns primitive rows over
    (R_1..R_L, H_1..H_L), each meaning row . x >= 0."""
    nr = L * L  # allocation columns, index l*L + (a-1)
    ncols = nr + 2 * L
    r_col = lambda l, a: l * L + (a - 1)

    rows: list[list[int]] = []
    # level coverage: sum_{l in U} r[l][a] >= H_a
    for a in range(1, L + 1):
        for subset in itertools.combinations(range(L), a):
            row = [0] * ncols
            for l in subset:
                row[r_col(l, a)] = 1
            row[nr + L + (a - 1)] = -1
            rows.append(row)
    # nonnegativity of every allocation variable
    for j in range(nr):
        row = [0] * ncols
        row[j] = 1
        rows.append(row)

    # Gaussian substitution of the rate equalities: r[l][1] = R_l - sum_{a>=2} r[l][a]
    for l in range(L):
        expr = [0] * ncols  # r[l][1] equals expr . x
        expr[nr + l] = 1
        for a in range(2, L + 1):
            expr[r_col(l, a)] = -1
        col = r_col(l, 1)
        for row in rows:
            c = row[col]
            if c:
                row[col] = 0
                for k in range(ncols):
                    if expr[k]:
                        row[k] += c * expr[k]

    remaining = [r_col(l, a) for l in range(L) for a in range(2, L + 1)]
    work: dict[tuple[int, ...], frozenset[int]] = {}
    for i, row in enumerate(rows):
        key = _primitive(tuple(row))
        if any(key):
            work.setdefault(key, frozenset([i]))

    eliminated = 0
    while remaining:
        # cheapest column first: fewest positive*negative combinations
        def cost(col):
            pos = sum(1 for r in work if r[col] > 0)
            neg = sum(1 for r in work if r[col] < 0)
            return pos * neg, col
        col = min(remaining, key=cost)
        remaining.remove(col)
        eliminated += 1

        pos, neg, keep = [], [], {}
        for row, hist in work.items():
            if row[col] > 0:
                pos.append((row, hist))
            elif row[col] < 0:
                neg.append((row, hist))
            else:
                keep[row] = hist
        for (rp, hp), (rn, hn) in itertools.product(pos, neg):
            hist = hp | hn
            if len(hist) > eliminated + 1:
                continue  # ancestor-count cutoff: such a row is redundant
            combo = _primitive(tuple(rp[k] * -rn[col] + rn[k] * rp[col] for k in range(ncols)))
            if any(combo) and (combo not in keep or len(keep[combo]) > len(hist)):
                keep[combo] = hist
        work = _dominate(keep, protected_cols=set(remaining))

    out = sorted(tuple(row[nr:]) for row in work)
    return [row for row in out if any(row)]


def _dominate(work: dict[tuple[int, ...], frozenset[int]],
              protected_cols: set[int]) -> dict[tuple[int, ...], frozenset[int]]:
    """Drop rows b with b >= a componentwise for some kept a (x >= 0 makes b
    implied).  Unit nonnegativity rows of still-present allocation columns are
    never dropped; domination reasoning relies on them."""
    items = sorted(work.items())
    kept: list[tuple[tuple[int, ...], frozenset[int]]] = []
    out: dict[tuple[int, ...], frozenset[int]] = {}
    for row, hist in items:
        protected = sum(row) == 1 and row.count(1) == 1 and \
            any(row[c] == 1 for c in protected_cols)
        if not protected and any(all(b >= a for b, a in zip(row, other)) for other, _ in kept):
            continue
        kept.append((row, hist))
        out[row] = hist
    return out


def _implied_homogeneous(target: tuple[int, ...], others: list[tuple[int, ...]]) -> bool:
    """target . x >= 0 for every x >= 0 satisfying the other rows?

    Tested in Farkas form: the target is implied iff it dominates a
    nonnegative combination of the other rows, i.e. some y >= 0 has
    (others)^T y <= target componentwise.  Polyhedral cone duality makes this
    exact, and the LP has only one row per column of the original system.
    """
    if not others:
        return all(c >= 0 for c in target)
    lp = LinearProgram(len(others))
    for k in range(len(target)):
        lp.add([Fraction(row[k]) for row in others], Relation.LE, target[k])
    return solve(lp).status is Status.FEASIBLE


def _minimize_system(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Greedy irredundant subsystem via one exact LP implication test per row."""
    kept = sorted(set(rows))
    for row in sorted(set(rows)):
        others = [r for r in kept if r != row]
        if _implied_homogeneous(row, others):
            kept = others
    return kept


def _row_to_inequality(row: tuple[int, ...], L: int) -> Inequality:
    lam = tuple(Fraction(c) for c in row[:L])
    f = tuple(Fraction(-c) for c in row[L:])
    if any(c < 0 for c in lam) or any(v < 0 for v in f) or not any(lam):
        raise AssertionError(f"projected row is not region-shaped: {row}")
    scale = min(c for c in lam if c)
    lv = LambdaVector(tuple(c / scale for c in lam))
    return Inequality(lv, tuple(v / scale for v in f), lv.theta)


def _inequality_sort_key(ineq: Inequality):
    seq = ineq.lam.theta_seq
    if seq is not None:
        return (0, ineq.lam.zeta, tuple(-t for t in seq), ineq.lam.components)
    return (1, ineq.lam.zeta, (), ineq.lam.components)


def fourier_motzkin_region(L: int, entropies=None) -> list[Inequality]:
    """Projected inequality system over the rates, one Inequality per row.

    The entropy profile is carried symbolically; when a concrete positive
    profile is supplied, the final redundancy removal is performed at that
    profile instead of over the joint nonnegative cone.
    """
    if not 1 <= L <= MAX_FM_LEVELS:
        raise ResourceLimitError(f"Fourier-Motzkin limited to 1 <= L <= {MAX_FM_LEVELS}")
    rows = _project_allocation_system(L)
    if entropies is None:
        minimal = _minimize_system(rows)
    else:
        entropies = tuple(Fraction(h) for h in entropies)
        if len(entropies) != L:
            raise ValueError("entropies must have length L")
        minimal = _minimize_at_profile(rows, L, entropies)
    ineqs = [_row_to_inequality(row, L) for row in minimal]
    return sorted(ineqs, key=_inequality_sort_key)


def _minimize_at_profile(rows: list[tuple[int, ...]], L: int,
                         entropies: tuple[Fraction, ...]) -> list[tuple[int, ...]]:
    def implied(target, others) -> bool:
        lp = LinearProgram(L)
        for row in others:
            rhs = -sum(Fraction(c) * h for c, h in zip(row[L:], entropies))
            lp.add([Fraction(c) for c in row[:L]], Relation.GE, rhs)
        lp.set_objective([Fraction(c) for c in target[:L]], Sense.MIN)
        result = solve(lp)
        if result.status is Status.UNBOUNDED:
            return False
        bound = -sum(Fraction(c) * h for c, h in zip(target[L:], entropies))
        return result.objective_value >= bound

    kept = sorted(set(rows))
    for row in sorted(set(rows)):
        others = [r for r in kept if r != row]
        if implied(row, others):
            kept = others
    return kept


def inequality_to_row(ineq: Inequality) -> tuple[int, ...]:
    """(lambda | -f) as a primitive integer vector over the (R, H) columns."""
    values = list(ineq.lam.components) + [-v for v in ineq.f_values]
    scale = 1
    for v in values:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    return _primitive(tuple(int(v * scale) for v in values))


def systems_equivalent(a: list[Inequality], b: list[Inequality]) -> bool:
    """Mutual implication of every row over the nonnegative (R, H) cone."""
    rows_a = [inequality_to_row(i) for i in a]
    rows_b = [inequality_to_row(i) for i in b]
    return (all(_implied_homogeneous(r, rows_b) for r in rows_a)
            and all(_implied_homogeneous(r, rows_a) for r in rows_b))
