from fractions import Fraction as F

import pytest

from smdc.lp import (LinearProgram, Relation, Sense, Status,
                     assert_feasible_point, solve)


def test_simple_max():
    lp = LinearProgram(1)
    lp.add([1], Relation.LE, 5)
    lp.set_objective([1], Sense.MAX)
    result = solve(lp)
    assert result.status is Status.OPTIMAL
    assert result.point == (F(5),)
    assert result.objective_value == 5


def test_infeasible_equality_system():
    lp = LinearProgram(2)
    lp.add([1, 1], Relation.EQ, 3)
    lp.add([1, 0], Relation.GE, 2)
    lp.add([0, 1], Relation.GE, 2)
    assert solve(lp).status is Status.INFEASIBLE


def test_resolution_instance_table_value():
    # the defining LP for the all-ones coefficient vector at level 2
    lp = LinearProgram(3)
    lp.add([1, 1, 0], Relation.LE, 1)
    lp.add([1, 0, 1], Relation.LE, 1)
    lp.add([0, 1, 1], Relation.LE, 1)
    lp.set_objective([1, 1, 1], Sense.MAX)
    result = solve(lp)
    assert result.status is Status.OPTIMAL
    assert result.objective_value == F(3, 2)
    assert assert_feasible_point(lp, result.point)


def test_unbounded():
    lp = LinearProgram(2)
    lp.add([1, -1], Relation.GE, 0)
    lp.set_objective([-1, 0], Sense.MIN)
    assert solve(lp).status is Status.UNBOUNDED


def test_feasibility_only_status():
    lp = LinearProgram(2)
    lp.add([1, 1], Relation.GE, 3)
    result = solve(lp)
    assert result.status is Status.FEASIBLE
    assert assert_feasible_point(lp, result.point)
    assert result.objective_value is None


def test_empty_program_rejected():
    with pytest.raises(ValueError):
        solve(LinearProgram(0))


def test_zero_rows_dropped_or_reject():
    lp = LinearProgram(1)
    lp.add([0], Relation.GE, 1)  # 0 >= 1
    assert solve(lp).status is Status.INFEASIBLE
    lp = LinearProgram(1)
    lp.add([0], Relation.LE, 1)  # 0 <= 1, vacuous
    lp.set_objective([1], Sense.MIN)
    assert solve(lp).objective_value == 0


def test_lower_bounds_shift():
    lp = LinearProgram(2, var_lower_bounds=(F(1, 2), F(2)))
    lp.add([1, 1], Relation.LE, 4)
    lp.set_objective([1, 1], Sense.MAX)
    result = solve(lp)
    assert result.objective_value == 4
    assert all(x >= b for x, b in zip(result.point, (F(1, 2), F(2))))


def test_degenerate_cycling_regression():
    # Beale's classic cycling instance; Bland's rule must terminate at -1/20.
    lp = LinearProgram(4)
    lp.add([F(1, 4), -60, F(-1, 25), 9], Relation.LE, 0)
    lp.add([F(1, 2), -90, F(-1, 50), 3], Relation.LE, 0)
    lp.add([0, 0, 1, 0], Relation.LE, 1)
    lp.set_objective([F(-3, 4), 150, F(-1, 50), 6], Sense.MIN)
    result = solve(lp)
    assert result.status is Status.OPTIMAL
    assert result.objective_value == F(-1, 20)
    assert assert_feasible_point(lp, result.point)


def test_determinism():
    lp = LinearProgram(3)
    lp.add([1, 2, 3], Relation.LE, 10)
    lp.add([3, 1, 1], Relation.GE, 2)
    lp.add([1, 1, 1], Relation.EQ, 4)
    lp.set_objective([1, -1, 2], Sense.MIN)
    first = solve(lp)
    second = solve(lp)
    assert first == second == solve(lp)


def _dual_of_min_ge(c, rows, rhs):
    """Dual of min c.x s.t. rows.x >= rhs, x >= 0: max rhs.y, rows^T y <= c."""
    dual = LinearProgram(len(rows))
    for k in range(len(c)):
        dual.add([row[k] for row in rows], Relation.LE, c[k])
    dual.set_objective(rhs, Sense.MAX)
    return dual


def test_strong_duality_on_redundancy_instances():
    from smdc.region import list_inequalities

    for L, index in ((2, 2), (3, 5), (3, 9)):
        ineqs = list_inequalities(L, ordered_only=False)
        target = ineqs[index]
        ones = (F(1),) * L
        rows = [tuple(i.lam) for k, i in enumerate(ineqs) if k != index]
        rhs = [i.rhs(ones) for k, i in enumerate(ineqs) if k != index]
        primal = LinearProgram(L)
        for row, b in zip(rows, rhs):
            primal.add(row, Relation.GE, b)
        primal.set_objective(tuple(target.lam), Sense.MIN)
        p = solve(primal)
        d = solve(_dual_of_min_ge(tuple(target.lam), rows, rhs))
        assert p.status is Status.OPTIMAL and d.status is Status.OPTIMAL
        assert p.objective_value == d.objective_value


def test_assert_feasible_point_checks():
    lp = LinearProgram(1)
    lp.add([1], Relation.GE, 1)
    assert assert_feasible_point(lp, [1])
    assert not assert_feasible_point(lp, [F(1, 2)])
    with pytest.raises(ValueError):
        assert_feasible_point(lp, [1, 2])


def test_certificate_soundness_random():
    from smdc.rng import SplitMix64, random_fraction

    rng = SplitMix64(2024)
    for _ in range(60):
        n = 2 + rng.randrange(3)
        m = 1 + rng.randrange(4)
        lp = LinearProgram(n)
        for _ in range(m):
            coeffs = [random_fraction(rng) - random_fraction(rng) for _ in range(n)]
            rel = (Relation.LE, Relation.GE, Relation.EQ)[rng.randrange(3)]
            lp.add(coeffs, rel, random_fraction(rng))
        if rng.randrange(2):
            lp.set_objective([random_fraction(rng) - random_fraction(rng)
                              for _ in range(n)], Sense.MIN)
        result = solve(lp)
        if result.status in (Status.FEASIBLE, Status.OPTIMAL):
            assert assert_feasible_point(lp, result.point)
