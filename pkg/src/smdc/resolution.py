"""The resolution function f_alpha and optimal alpha-resolutions.

An alpha-resolution for a nonnegative coefficient vector lambda puts
nonnegative weights on the Hamming-weight-alpha binary vectors so that the
per-component weight sums stay below lambda; f_alpha(lambda) is the maximum
total weight.  The closed form evaluates tail averages

    g(beta) = (sum of the L - beta smallest-ordered components) / (alpha - beta)

and takes the minimum over beta, which a forward scan locates because g is
pseudo-convex in beta.  A direct LP solve of the defining program is kept as
an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb

from .errors import ResourceLimitError
from .lp import LinearProgram, Relation, Sense, Status, solve

MAX_BRUTEFORCE_L = 12


@dataclass(frozen=True)
class LambdaVector:
    """Nonnegative rational coefficient vector, not all zero.

    Immutable; the ordered view, nonzero count and theta-sequence are computed
    lazily and cached.  Components are stored exactly as given (no implicit
    normalization); ``normalized()`` splits off the scale when needed.
    """

    components: tuple[Fraction, ...]

    def __post_init__(self):
        comps = tuple(Fraction(c) for c in self.components)
        if not comps:
            raise ValueError("lambda vector must have at least one component")
        if any(c < 0 for c in comps):
            raise ValueError("lambda components must be nonnegative")
        if not any(comps):
            raise ValueError("lambda vector must not be all zero")
        object.__setattr__(self, "components", comps)

    @classmethod
    def coerce(cls, value) -> "LambdaVector":
        if isinstance(value, cls):
            return value
        return cls(tuple(value))

    @property
    def L(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Permutation pi: order[j] is the index of the (j+1)-th largest component."""
        return tuple(sorted(range(self.L), key=lambda i: (-self.components[i], i)))

    @cached_property
    def sorted_desc(self) -> tuple[Fraction, ...]:
        return tuple(self.components[i] for i in self.order)

    @cached_property
    def zeta(self) -> int:
        """Number of nonzero components."""
        return sum(1 for c in self.components if c)

    @property
    def min_nonzero(self) -> Fraction:
        return self.sorted_desc[self.zeta - 1]

    @property
    def is_normalized(self) -> bool:
        return self.min_nonzero == 1

    def normalized(self) -> tuple[Fraction, "LambdaVector"]:
        """(scale mu, unit vector) with self = mu * unit and min nonzero of unit = 1."""
        mu = self.min_nonzero
        if mu == 1:
            return Fraction(1), self
        return mu, LambdaVector(tuple(c / mu for c in self.components))

    @cached_property
    def theta_seq(self) -> tuple[int, ...] | None:
        """theta_{zeta-1}, ..., theta_1 when the vector belongs to the generator
        set (each ordered component is an exact unit fraction of its tail sum,
        with theta_j <= theta_{j+1} + 1); None otherwise.  Scale matters: only
        vectors whose minimum nonzero component is 1 are members."""
        if not self.is_normalized:
            return None
        lam = self.sorted_desc
        thetas: list[int] = []
        prev = 0
        tail = sum(lam[self.zeta:], Fraction(0)) + lam[self.zeta - 1]  # = 1 + zeros
        for j in range(self.zeta - 1, 0, -1):  # positions j (1-based), bottom-up
            value = lam[j - 1]
            ratio = tail / value
            if ratio.denominator != 1 or not 1 <= ratio <= prev + 1:
                return None
            prev = int(ratio)
            thetas.append(prev)
            tail += value
        return tuple(thetas)

    @property
    def theta(self) -> int | None:
        """Display parameter theta_1 (0 for the single-nonzero vector)."""
        seq = self.theta_seq
        if seq is None:
            return None
        return seq[-1] if seq else 0

    def permuted(self, perm) -> "LambdaVector":
        return LambdaVector(tuple(self.components[p] for p in perm))


@dataclass(frozen=True)
class FVector:
    """All L resolution-function values plus the minimizing scan positions."""

    values: tuple[Fraction, ...]
    beta_stars: tuple[int, ...]


@dataclass
class Resolution:
    """Sparse weights on weight-alpha bitmasks; bit i is component i."""

    L: int
    alpha: int
    weights: dict[int, Fraction]

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def column_sums(self) -> tuple[Fraction, ...]:
        sums = [Fraction(0)] * self.L
        for mask, w in self.weights.items():
            for i in range(self.L):
                if mask >> i & 1:
                    sums[i] += w
        return tuple(sums)

    def mask_string(self, mask: int) -> str:
        return "".join("1" if mask >> i & 1 else "0" for i in range(self.L))


def _suffix_sums(sorted_desc: tuple[Fraction, ...]) -> list[Fraction]:
    """suffix[b] = sum of components at ordered positions b+1..L (1-based)."""
    n = len(sorted_desc)
    suffix = [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sorted_desc[i]
    return suffix


def _check_alpha(L: int, alpha: int) -> None:
    if not 1 <= alpha <= L:
        raise ValueError(f"alpha must be in 1..{L}, got {alpha}")


def g_value(lam, alpha: int, beta: int) -> Fraction:
    """Tail average (1/(alpha-beta)) * sum of the ordered components after beta."""
    lv = LambdaVector.coerce(lam)
    _check_alpha(lv.L, alpha)
    if not 0 <= beta <= alpha - 1:
        raise ValueError(f"beta must be in 0..{alpha - 1}, got {beta}")
    return _suffix_sums(lv.sorted_desc)[beta] / (alpha - beta)


def _beta_scan(suffix: list[Fraction], alpha: int, start: int = 0) -> int:
    """First beta >= start with g(beta) <= g(beta+1); pseudo-convexity makes it
    the smallest minimizer.  Cross-multiplied to stay in integer arithmetic."""
    for beta in range(start, alpha - 1):
        if suffix[beta] * (alpha - beta - 1) <= suffix[beta + 1] * (alpha - beta):
            return beta
    return alpha - 1


def beta_star(lam, alpha: int) -> int:
    """Smallest minimizer of g over beta in 0..alpha-1, by forward scan."""
    lv = LambdaVector.coerce(lam)
    _check_alpha(lv.L, alpha)
    return _beta_scan(_suffix_sums(lv.sorted_desc), alpha)


def f_alpha(lam, alpha: int) -> Fraction:
    """Closed-form optimum of the alpha-resolution program: g at the scan stop."""
    lv = LambdaVector.coerce(lam)
    _check_alpha(lv.L, alpha)
    suffix = _suffix_sums(lv.sorted_desc)
    beta = _beta_scan(suffix, alpha)
    return suffix[beta] / (alpha - beta)


def f_vector(lam) -> FVector:
    """All f values at once; each scan resumes where the previous one stopped
    (the minimizers are weakly increasing in alpha)."""
    lv = LambdaVector.coerce(lam)
    suffix = _suffix_sums(lv.sorted_desc)
    values: list[Fraction] = []
    betas: list[int] = []
    beta = 0
    for alpha in range(1, lv.L + 1):
        beta = _beta_scan(suffix, alpha, start=beta)
        values.append(suffix[beta] / (alpha - beta))
        betas.append(beta)
    return FVector(tuple(values), tuple(betas))


def _masks_of_weight(L: int, alpha: int) -> list[int]:
    masks = []
    for combo in itertools.combinations(range(L), alpha):
        m = 0
        for i in combo:
            m |= 1 << i
        masks.append(m)
    masks.sort()
    return masks


def _resolution_lp(lam_values: tuple[Fraction, ...], alpha: int) -> tuple[LinearProgram, list[int]]:
    L = len(lam_values)
    masks = _masks_of_weight(L, alpha)
    lp = LinearProgram(len(masks))
    for i in range(L):
        lp.add([Fraction(1) if m >> i & 1 else Fraction(0) for m in masks],
               Relation.LE, lam_values[i])
    lp.set_objective([Fraction(1)] * len(masks), Sense.MAX)
    return lp, masks


def f_alpha_bruteforce(lam, alpha: int) -> Fraction:
    """Independent oracle: solve the defining LP exactly."""
    lv = LambdaVector.coerce(lam)
    _check_alpha(lv.L, alpha)
    if lv.L > MAX_BRUTEFORCE_L:
        raise ResourceLimitError(
            f"brute-force LP limited to L <= {MAX_BRUTEFORCE_L} ({comb(lv.L, alpha)} variables)")
    lp, _ = _resolution_lp(lv.components, alpha)
    result = solve(lp)
    assert result.status is Status.OPTIMAL
    return result.objective_value


def optimal_resolution(lam, alpha: int) -> Resolution:
    """A resolution attaining f_alpha(lambda), in the caller's component order.

    The scan position beta* fixes a prefix of the largest ordered components
    that appear in every support vector; the remainder is an exact LP solve on
    the tail, which satisfies the perfect-resolution condition.  The support is
    whichever optimum the deterministic solver lands on.
    """
    lv = LambdaVector.coerce(lam)
    _check_alpha(lv.L, alpha)
    if alpha > lv.zeta:
        return Resolution(lv.L, alpha, {})
    suffix = _suffix_sums(lv.sorted_desc)
    beta = _beta_scan(suffix, alpha)
    tail = lv.sorted_desc[beta:]
    m = alpha - beta
    if m == 1:
        tail_weights = {1 << i: w for i, w in enumerate(tail) if w}
    else:
        lp, masks = _resolution_lp(tail, m)
        result = solve(lp)
        assert result.status is Status.OPTIMAL
        tail_weights = {mask: w for mask, w in zip(masks, result.point) if w}
    prefix = (1 << beta) - 1
    weights: dict[int, Fraction] = {}
    for tail_mask, w in tail_weights.items():
        sorted_mask = prefix | (tail_mask << beta)
        orig = 0
        for j in range(lv.L):
            if sorted_mask >> j & 1:
                orig |= 1 << lv.order[j]
        weights[orig] = w
    return Resolution(lv.L, alpha, weights)


def verify_resolution(lam, res: Resolution, expected_total) -> bool:
    """Exact feasibility and total check of a resolution against lambda."""
    lv = LambdaVector.coerce(lam)
    if res.L != lv.L:
        raise ValueError("resolution and lambda dimensions differ")
    for mask, w in res.weights.items():
        if w < 0 or not 0 < mask < (1 << lv.L) or bin(mask).count("1") != res.alpha:
            return False
    if any(s > c for s, c in zip(res.column_sums(), lv.components)):
        return False
    return res.total() == Fraction(expected_total)
