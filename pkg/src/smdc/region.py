"""The explicit rate region: inequalities, membership tests, redundancy.

A region inequality pairs a coefficient vector lambda with the multipliers
f(lambda) of the entropy profile:

    sum_l lambda_l R_l  >=  sum_a f_a(lambda) H_a.

Membership of a rate tuple is decided two independent ways: by evaluating the
ordered inequalities against the ascending-sorted rates (the rearrangement
pairing makes those sufficient), and by exact LP feasibility of the underlying
per-level allocation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimitError
from .generator import expand_permutations, generate_ordered
from .lp import LinearProgram, Relation, Sense, Status, solve
from .ratio import format_rational
from .resolution import LambdaVector, f_vector

MAX_LP_LEVELS = 12


@dataclass(frozen=True)
class Inequality:
    """One halfspace of the region; f is recomputable from lam."""

    lam: LambdaVector
    f_values: tuple[Fraction, ...]
    theta: int | None = None

    @classmethod
    def from_lambda(cls, lam) -> "Inequality":
        lv = LambdaVector.coerce(lam)
        return cls(lv, f_vector(lv).values, lv.theta)

    @property
    def L(self) -> int:
        return self.lam.L

    def lhs(self, rates) -> Fraction:
        return sum(l * Fraction(r) for l, r in zip(self.lam, rates))

    def rhs(self, entropies) -> Fraction:
        return sum(f * Fraction(h) for f, h in zip(self.f_values, entropies))

    def holds_for(self, rates, entropies) -> bool:
        return self.lhs(rates) >= self.rhs(entropies)

    def to_json_obj(self) -> dict:
        return {
            "lambda": [format_rational(c) for c in self.lam],
            "f": [format_rational(v) for v in self.f_values],
            "theta": self.theta,
        }


@dataclass(frozen=True)
class RateQuery:
    """Rate tuple plus entropy profile to be tested for achievability."""

    rates: tuple[Fraction, ...]
    entropies: tuple[Fraction, ...]

    def __post_init__(self):
        rates = tuple(Fraction(r) for r in self.rates)
        entropies = tuple(Fraction(h) for h in self.entropies)
        if len(rates) != len(entropies) or not rates:
            raise ValueError("rates and entropies must have the same positive length")
        if any(r < 0 for r in rates) or any(h < 0 for h in entropies):
            raise ValueError("rates and entropies must be nonnegative")
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "entropies", entropies)

    @property
    def L(self) -> int:
        return len(self.rates)


@dataclass(frozen=True)
class SuperpositionAllocation:
    """Per-level rate split r[l][a]; row sums give the rates and every
    cardinality-a encoder subset must cover the level-a entropy."""

    r: tuple[tuple[Fraction, ...], ...]

    @property
    def L(self) -> int:
        return len(self.r)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.r)

    def satisfies(self, query: RateQuery) -> bool:
        L = self.L
        if L != query.L or any(len(row) != L for row in self.r):
            return False
        if any(x < 0 for row in self.r for x in row):
            return False
        if self.row_sums() != query.rates:
            return False
        for a in range(1, L + 1):
            h = query.entropies[a - 1]
            for subset in itertools.combinations(range(L), a):
                if sum(self.r[l][a - 1] for l in subset) < h:
                    return False
        return True

    def to_json_obj(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.r]


@dataclass(frozen=True)
class MembershipVerdict:
    achievable: bool
    method: str  # "ineq" | "lp"
    witness_inequality: Inequality | None = None
    witness_allocation: SuperpositionAllocation | None = None

    def to_json_obj(self) -> dict:
        witness = None
        if self.witness_inequality is not None:
            witness = self.witness_inequality.to_json_obj()
        elif self.witness_allocation is not None:
            witness = {"allocation": self.witness_allocation.to_json_obj()}
        return {"achievable": self.achievable, "method": self.method, "witness": witness}


def list_inequalities(L: int, ordered_only: bool = True) -> list[Inequality]:
    """The region's halfspaces; ordered-only reproduces the table rows."""
    base = generate_ordered(L)
    members = base if ordered_only else expand_permutations(base)
    return [Inequality.from_lambda(lv) for lv in members]


def check_achievable_inequalities(query: RateQuery) -> MembershipVerdict:
    """Test the ordered inequalities against ascending-sorted rates.

    Descending lambda against ascending rates is the permutation minimizing
    the pairing, so these S_L^0 tests cover the whole permutation closure.
    The witness, when violated, is mapped back to the caller's rate order.
    """
    order = sorted(range(query.L), key=lambda i: (query.rates[i], i))
    sorted_rates = [query.rates[i] for i in order]
    for lv in generate_ordered(query.L):
        ineq = Inequality.from_lambda(lv)
        if sum(l * r for l, r in zip(lv, sorted_rates)) < ineq.rhs(query.entropies):
            perm = [0] * query.L
            for pos, i in enumerate(order):
                perm[i] = pos
            witness_lam = LambdaVector(tuple(lv.components[p] for p in perm))
            witness = Inequality(witness_lam, ineq.f_values, lv.theta)
            return MembershipVerdict(False, "ineq", witness_inequality=witness)
    return MembershipVerdict(True, "ineq")


def superposition_feasibility_lp(query: RateQuery) -> LinearProgram:
    """The allocation-existence LP: variables r[l][a] flattened row-major."""
    L = query.L
    if L > MAX_LP_LEVELS:
        raise ResourceLimitError(f"feasibility LP limited to L <= {MAX_LP_LEVELS}")
    lp = LinearProgram(L * L)
    zero = [Fraction(0)] * (L * L)
    for l in range(L):
        row = zero.copy()
        for a in range(L):
            row[l * L + a] = Fraction(1)
        lp.add(row, Relation.EQ, query.rates[l])
    for a in range(1, L + 1):
        for subset in itertools.combinations(range(L), a):
            row = zero.copy()
            for l in subset:
                row[l * L + (a - 1)] = Fraction(1)
            lp.add(row, Relation.GE, query.entropies[a - 1])
    return lp


def check_achievable_lp(query: RateQuery) -> MembershipVerdict:
    """Exact LP feasibility of the per-level allocation system."""
    lp = superposition_feasibility_lp(query)
    result = solve(lp)
    if result.status is Status.INFEASIBLE:
        return MembershipVerdict(False, "lp")
    L = query.L
    rows = tuple(tuple(result.point[l * L + a] for a in range(L)) for l in range(L))
    return MembershipVerdict(True, "lp", witness_allocation=SuperpositionAllocation(rows))


def redundancy_certificate(L: int, index: int, entropies) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Essentiality certificate for one inequality of the full closure.

    Minimizes the indexed inequality's left side subject to all the others
    (rates nonnegative).  An optimum strictly below the indexed right side
    proves the inequality is not implied; the minimizer is the witness.
    """
    if L > 5:
        raise ResourceLimitError("redundancy certificates limited to L <= 5")
    entropies = tuple(Fraction(h) for h in entropies)
    if len(entropies) != L or any(h <= 0 for h in entropies):
        raise ValueError("entropies must be strictly positive and of length L")
    ineqs = list_inequalities(L, ordered_only=False)
    if not 0 <= index < len(ineqs):
        raise ValueError(f"index must be in 0..{len(ineqs) - 1}")
    target = ineqs[index]
    lp = LinearProgram(L)
    for i, ineq in enumerate(ineqs):
        if i != index:
            lp.add(tuple(ineq.lam), Relation.GE, ineq.rhs(entropies))
    lp.set_objective(tuple(target.lam), Sense.MIN)
    result = solve(lp)
    assert result.status is Status.OPTIMAL  # coefficients nonnegative, so bounded
    essential = result.objective_value < target.rhs(entropies)
    return (essential, result.point if essential else None)
