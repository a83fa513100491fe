import random
from fractions import Fraction

import pytest

from ineqelim.simplex import solve_eq_nonneg

F = Fraction


def check(matrix, rhs):
    x = solve_eq_nonneg(matrix, rhs)
    if x is None:
        return None
    assert all(v >= 0 for v in x)
    for row, b in zip(matrix, rhs):
        assert sum(a * v for a, v in zip(row, x)) == b
    return x


def test_simple_feasible():
    # x1 + x2 = 3, x1 - x2 = 1 -> (2, 1)
    x = check([[F(1), F(1)], [F(1), F(-1)]], [F(3), F(1)])
    assert x == [F(2), F(1)]


def test_requires_nonnegativity():
    # x1 + x2 = -1 has no nonnegative solution
    assert solve_eq_nonneg([[F(1), F(1)]], [F(-1)]) is None


def test_negative_rhs_handled_by_row_negation():
    # -x1 = -5 -> x1 = 5
    x = check([[F(-1)]], [F(-5)])
    assert x == [F(5)]


def test_inconsistent():
    matrix = [[F(1), F(1)], [F(1), F(1)]]
    assert solve_eq_nonneg(matrix, [F(1), F(2)]) is None


def test_underdetermined_picks_some_solution():
    x = check([[F(1), F(1), F(1)]], [F(2)])
    assert sum(x) == F(2)


def test_zero_rows_and_columns():
    assert solve_eq_nonneg([], []) == []
    assert solve_eq_nonneg([[F(0), F(0)]], [F(0)]) is not None
    assert solve_eq_nonneg([[F(0)]], [F(1)]) is None


def test_fraction_exactness():
    x = check([[F(1, 3), F(1, 7)]], [F(1, 21)])
    assert x is not None


def test_validation():
    with pytest.raises(ValueError):
        solve_eq_nonneg([[F(1)], [F(1), F(2)]], [F(1), F(1)])
    with pytest.raises(ValueError):
        solve_eq_nonneg([[F(1)]], [F(1), F(2)])


def test_degenerate_cycling_guard():
    # classic degenerate instance; Bland's rule must terminate
    matrix = [
        [F(1), F(1), F(1), F(0)],
        [F(1), F(-1), F(0), F(1)],
    ]
    rhs = [F(0), F(0)]
    x = check(matrix, rhs)
    assert x is not None


def test_random_instances_against_verifier():
    rng = random.Random(4242)
    feasible = infeasible = 0
    for _ in range(150):
        m = rng.randint(1, 4)
        n = rng.randint(1, 5)
        matrix = [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
        rhs = [F(rng.randint(-4, 4)) for _ in range(m)]
        x = check(matrix, rhs)
        if x is None:
            infeasible += 1
            # cross-check: a coarse grid search finds nothing either
            if n <= 3:
                found = False
                grid = [F(k, 2) for k in range(0, 17)]
                for point in _grid_points(grid, n):
                    if all(
                        sum(a * v for a, v in zip(row, point)) == b
                        for row, b in zip(matrix, rhs)
                    ):
                        found = True
                        break
                assert not found
        else:
            feasible += 1
    assert feasible and infeasible


def _grid_points(grid, n):
    if n == 1:
        for g in grid:
            yield (g,)
    else:
        for g in grid:
            for rest in _grid_points(grid, n - 1):
                yield (g,) + rest
