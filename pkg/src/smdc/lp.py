"""Exact rational linear programming.

Dense two-phase simplex over arbitrary-precision rationals with Bland's
smallest-index rule for both the entering and the leaving variable, so every
solve terminates (no cycling) and is bit-for-bit deterministic.

Internally each tableau row is stored as a gcd-normalized integer vector with
a positive scale folded into its basic column ("fraction-free" pivoting); only
the reduced-cost row is kept in Fractions.  The pivot sequence is identical to
a plain Fraction tableau because entering/leaving choices depend only on signs
and exact ratios.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, lcm


class Relation(Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class Sense(Enum):
    MIN = "min"
    MAX = "max"


class Status(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpRow:
    coeffs: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction


@dataclass
class LinearProgram:
    """num_vars variables with individual lower bounds (default 0), no upper bounds."""

    num_vars: int
    rows: list[LpRow] = field(default_factory=list)
    objective: tuple[tuple[Fraction, ...], Sense] | None = None
    var_lower_bounds: tuple[Fraction, ...] | None = None

    def add(self, coeffs, relation: Relation, rhs) -> None:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.num_vars:
            raise ValueError("row length does not match num_vars")
        self.rows.append(LpRow(coeffs, relation, Fraction(rhs)))

    def set_objective(self, coeffs, sense: Sense) -> None:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.num_vars:
            raise ValueError("objective length does not match num_vars")
        self.objective = (coeffs, sense)

    def lower_bounds(self) -> tuple[Fraction, ...]:
        if self.var_lower_bounds is None:
            return (Fraction(0),) * self.num_vars
        if len(self.var_lower_bounds) != self.num_vars:
            raise ValueError("var_lower_bounds length does not match num_vars")
        return tuple(Fraction(b) for b in self.var_lower_bounds)


@dataclass(frozen=True)
class LpResult:
    status: Status
    point: tuple[Fraction, ...] | None = None
    objective_value: Fraction | None = None


class _Tableau:
    def __init__(self, n_cols: int):
        self.n_cols = n_cols
        self.rows: list[list[int]] = []    # coefficient part, len n_cols
        self.rhs: list[int] = []           # scaled right-hand sides, kept >= 0
        self.basis: list[int] = []         # basic column per row; diag = rows[i][basis[i]] > 0

    def value(self, i: int) -> Fraction:
        return Fraction(self.rhs[i], self.rows[i][self.basis[i]])

    def _normalize(self, i: int) -> None:
        g = gcd(self.rhs[i], *(abs(a) for a in self.rows[i]))
        if g > 1:
            self.rows[i] = [a // g for a in self.rows[i]]
            self.rhs[i] //= g

    def pivot(self, j: int, r: int, obj: list[Fraction] | None) -> None:
        if self.rows[r][j] < 0:
            # Only reached when driving out a zero-valued basic variable.
            self.rows[r] = [-a for a in self.rows[r]]
            self.rhs[r] = -self.rhs[r]
        p = self.rows[r][j]
        row_r = self.rows[r]
        for i in range(len(self.rows)):
            if i == r:
                continue
            q = self.rows[i][j]
            if q:
                row_i = self.rows[i]
                self.rows[i] = [p * a - q * b for a, b in zip(row_i, row_r)]
                self.rhs[i] = p * self.rhs[i] - q * self.rhs[r]
                self._normalize(i)
        if obj is not None and obj[j]:
            factor = obj[j] / p
            for k in range(self.n_cols):
                if row_r[k]:
                    obj[k] -= factor * row_r[k]
        self.basis[r] = j
        self._normalize(r)

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        obj = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                diag = self.rows[i][b]
                for k in range(self.n_cols):
                    if self.rows[i][k]:
                        obj[k] -= cb * Fraction(self.rows[i][k], diag)
        return obj

    def run_simplex(self, obj: list[Fraction], banned: set[int],
                    ban_on_leave: set[int] | None = None) -> str:
        while True:
            enter = -1
            for j in range(self.n_cols):
                if j not in banned and obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            for i in range(len(self.rows)):
                a = self.rows[i][enter]
                if a > 0:
                    if leave < 0:
                        leave = i
                        continue
                    lhs = self.rhs[i] * self.rows[leave][enter]
                    rhs = self.rhs[leave] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[leave]):
                        leave = i
            if leave < 0:
                return "unbounded"
            if ban_on_leave and self.basis[leave] in ban_on_leave:
                banned.add(self.basis[leave])
            self.pivot(enter, leave, obj)


def solve(lp: LinearProgram) -> LpResult:
    """Two-phase exact simplex; see module docstring for guarantees."""
    if lp.num_vars < 1:
        raise ValueError("program must have at least one variable")
    n = lp.num_vars
    lb = lp.lower_bounds()

    # Shift x = y + lb so all variables are >= 0, and drop identically-zero rows.
    shifted: list[tuple[list[Fraction], Relation, Fraction]] = []
    for row in lp.rows:
        if len(row.coeffs) != n:
            raise ValueError("row length does not match num_vars")
        rhs = row.rhs - sum(c * b for c, b in zip(row.coeffs, lb))
        if not any(row.coeffs):
            if row.relation is Relation.LE:
                ok = rhs >= 0
            elif row.relation is Relation.GE:
                ok = rhs <= 0
            else:
                ok = rhs == 0
            if not ok:
                return LpResult(Status.INFEASIBLE)
            continue
        shifted.append((list(row.coeffs), row.relation, rhs))

    n_slack = sum(1 for _, rel, _ in shifted if rel is not Relation.EQ)
    # A row can start with its slack basic only if the slack coefficient comes
    # out positive once the rhs has been made nonnegative; the rest get an
    # artificial variable and a phase-1 solve.
    needs_art = []
    for coeffs, rel, rhs in shifted:
        neg = rhs < 0
        if rel is Relation.EQ:
            needs_art.append(True)
        elif rel is Relation.LE:
            needs_art.append(neg)      # slack +1 flips to -1 when the row is negated
        else:
            needs_art.append(not neg)  # surplus -1 flips to +1 when negated
    n_art = sum(needs_art)
    n_cols = n + n_slack + n_art

    tab = _Tableau(n_cols)
    art_cols: list[int] = []
    slack_at = n
    art_at = n + n_slack
    for idx, (coeffs, rel, rhs) in enumerate(shifted):
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            slack_sign = -1 if rel is Relation.LE else 1
        else:
            slack_sign = 1 if rel is Relation.LE else -1
        scale = _row_scale(coeffs, rhs)
        dense = [int(c * scale) for c in coeffs] + [0] * (n_slack + n_art)
        if rel is not Relation.EQ:
            dense[slack_at] = slack_sign * scale
        if needs_art[idx]:
            dense[art_at] = scale
            basis_col = art_at
            art_cols.append(art_at)
            art_at += 1
        else:
            basis_col = slack_at
        if rel is not Relation.EQ:
            slack_at += 1
        tab.rows.append(dense)
        tab.rhs.append(int(rhs * scale))
        tab.basis.append(basis_col)
        tab._normalize(len(tab.rows) - 1)

    banned: set[int] = set()

    if art_cols:
        cost = [Fraction(0)] * n_cols
        for c in art_cols:
            cost[c] = Fraction(1)
        obj = tab.reduced_costs(cost)
        # Bounded below by 0, so never unbounded; once an artificial leaves the
        # basis it is banned from re-entering.
        tab.run_simplex(obj, banned, ban_on_leave=set(art_cols))
        if any(tab.value(i) != 0 for i in range(len(tab.rows)) if tab.basis[i] in art_cols):
            return LpResult(Status.INFEASIBLE)
        _drive_out_artificials(tab, set(art_cols))
        banned |= set(art_cols)

    if lp.objective is None:
        point = _extract_point(tab, n, lb)
        return LpResult(Status.FEASIBLE, point=point)

    coeffs, sense = lp.objective
    sign = 1 if sense is Sense.MIN else -1
    cost = [sign * Fraction(c) for c in coeffs] + [Fraction(0)] * (n_cols - n)
    obj = tab.reduced_costs(cost)
    outcome = tab.run_simplex(obj, banned)
    if outcome == "unbounded":
        return LpResult(Status.UNBOUNDED)
    point = _extract_point(tab, n, lb)
    value = sum(c * x for c, x in zip(coeffs, point))
    return LpResult(Status.OPTIMAL, point=point, objective_value=value)


def _row_scale(coeffs: list[Fraction], rhs: Fraction) -> int:
    return lcm(*(c.denominator for c in coeffs), rhs.denominator)


def _drive_out_artificials(tab: _Tableau, art_cols: set[int]) -> None:
    """Pivot zero-valued basic artificials out; drop rows that are redundant."""
    keep = []
    for i in range(len(tab.rows)):
        if tab.basis[i] not in art_cols:
            keep.append(i)
            continue
        enter = -1
        for j in range(tab.n_cols):
            if j not in art_cols and tab.rows[i][j]:
                enter = j
                break
        if enter < 0:
            continue  # 0 = 0 row
        tab.pivot(enter, i, None)
        keep.append(i)
    if len(keep) != len(tab.rows):
        tab.rows = [tab.rows[i] for i in keep]
        tab.rhs = [tab.rhs[i] for i in keep]
        tab.basis = [tab.basis[i] for i in keep]


def _extract_point(tab: _Tableau, n: int, lb: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    point = list(lb)
    for i, b in enumerate(tab.basis):
        if b < n:
            point[b] += tab.value(i)
    return tuple(point)


def assert_feasible_point(lp: LinearProgram, point) -> bool:
    """Exact row-by-row (and lower-bound) verification of a candidate point."""
    point = tuple(Fraction(x) for x in point)
    if len(point) != lp.num_vars:
        raise ValueError("point dimension does not match num_vars")
    for x, b in zip(point, lp.lower_bounds()):
        if x < b:
            return False
    for row in lp.rows:
        lhs = sum(c * x for c, x in zip(row.coeffs, point))
        if row.relation is Relation.LE and not lhs <= row.rhs:
            return False
        if row.relation is Relation.GE and not lhs >= row.rhs:
            return False
        if row.relation is Relation.EQ and lhs != row.rhs:
            return False
    return True
