import random

from p1homotopy.linsolve import IntegerSolver, feasible_mod_p, solve_integer


def mat_vec(rows, x):
    return [sum(a * b for a, b in zip(row, x)) for row in rows]


def test_simple_solvable():
    assert solve_integer([[2]], [4]) == [2]
    assert solve_integer([[2]], [3]) is None


def test_divisibility_matters():
    # x + y = 1 has integer solutions; 2x + 2y = 1 does not
    assert solve_integer([[1, 1]], [1]) is not None
    assert solve_integer([[2, 2]], [1]) is None
    assert solve_integer([[2, 2]], [4]) is not None


def test_inconsistent():
    rows = [[1, 0], [1, 0]]
    assert solve_integer(rows, [1, 2]) is None


def test_underdetermined_gcd():
    # 6x + 10y = 2 = gcd(6, 10): solvable over Z but not coordinate-wise
    x = solve_integer([[6, 10]], [2])
    assert x is not None and 6 * x[0] + 10 * x[1] == 2


def test_planted_solutions_random():
    rng = random.Random(99)
    for _ in range(60):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        x0 = [rng.randint(-4, 4) for _ in range(n)]
        b = mat_vec(rows, x0)
        x = solve_integer(rows, b)
        assert x is not None
        assert mat_vec(rows, x) == b


def test_multiple_rhs_share_reduction():
    rng = random.Random(7)
    rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
    solver = IntegerSolver(rows, 5)
    for _ in range(10):
        x0 = [rng.randint(-3, 3) for _ in range(5)]
        b = mat_vec(rows, x0)
        x = solver.solve(b)
        assert x is not None and mat_vec(rows, x) == b


def test_filter_is_sound():
    # the modular filter never rejects a solvable system
    rng = random.Random(3)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        x0 = [rng.randint(-5, 5) for _ in range(n)]
        b = mat_vec(rows, x0)
        assert feasible_mod_p(rows, [b]) == [True]


def test_filter_detects_rank_obstructions():
    # x = 1 and x = 2 simultaneously: infeasible mod every prime
    assert feasible_mod_p([[1], [1]], [[1, 2], [0, 0]]) == [False, True]


def test_empty_shapes():
    assert solve_integer([], [], ncols=0) == []
    assert feasible_mod_p([], [[]]) == [True]
