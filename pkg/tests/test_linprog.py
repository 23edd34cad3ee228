import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as hst

from certgame.linprog import LinearProgram, LpError, solve, solve_zero_sum
from oracles import matrix_game_value


def test_min_x_at_least_three():
    lp = LinearProgram("min")
    x = lp.add_var(1)
    lp.add_row({x: 1}, ">=", 3)
    sol = solve(lp)
    assert sol.status == "optimal" and sol.value == 3


def test_max_sum_with_cap():
    lp = LinearProgram.dense([1, 1], [[1, 1]], ["<="], [1], sense="max")
    sol = solve(lp)
    assert sol.value == 1
    assert sol.dual_objective(lp) == 1


def test_infeasible():
    lp = LinearProgram("min")
    x = lp.add_var(0)
    lp.add_row({x: 1}, "<=", -1)
    assert solve(lp).status == "infeasible"
    assert solve(lp, "float").status == "infeasible"


def test_unbounded():
    lp = LinearProgram.dense([1], [[-1]], ["<="], [1], sense="max")
    assert solve(lp).status == "unbounded"


def test_empty_program():
    lp = LinearProgram("min")
    lp.add_var(0)
    sol = solve(lp)
    assert sol.status == "optimal" and sol.value == 0


def test_bad_relation():
    lp = LinearProgram()
    lp.add_var(1)
    with pytest.raises(LpError):
        lp.add_row({0: 1}, "<>", 1)


def test_free_and_bounded_variables():
    # min x - y with -2 <= x <= 5, y <= 4 free below
    lp = LinearProgram("min")
    x = lp.add_var(1, -2, 5)
    y = lp.add_var(-1, None, 4)
    lp.add_row({x: 1, y: 1}, "<=", 10)
    sol = solve(lp)
    assert sol.value == -6
    assert sol.dual_objective(lp) == -6


def _random_lp(rng):
    nv, nr = rng.randint(1, 6), rng.randint(1, 6)
    c = [rng.randint(-4, 6) for _ in range(nv)]
    A = [[rng.randint(-3, 5) for _ in range(nv)] for _ in range(nr)]
    rels = [rng.choice(["<=", "<=", ">=", "="]) for _ in range(nr)]
    b = [rng.randint(-2, 9) for _ in range(nr)]
    return c, A, rels, b


def _dual_of(c, A, b):
    """max c.x, A x <= b, x >= 0 has dual min b.y, A^T y >= c, y >= 0."""
    At = [list(col) for col in zip(*A)]
    return LinearProgram.dense(b, At, [">="] * len(At), c, sense="min")


@pytest.mark.parametrize("seed", range(100))
def test_explicit_dual_matches(seed):
    rng = random.Random(seed)
    nv, nr = rng.randint(1, 10), rng.randint(1, 8)
    c = [rng.randint(-3, 6) for _ in range(nv)]
    A = [[rng.randint(0, 5) for _ in range(nv)] for _ in range(nr)]
    b = [rng.randint(0, 10) for _ in range(nr)]
    primal = solve(LinearProgram.dense(c, A, ["<="] * nr, b, sense="max"))
    dual = solve(_dual_of(c, A, b))
    if primal.status == "optimal":
        assert dual.status == "optimal"
        assert primal.value == dual.value
        assert primal.dual_objective(LinearProgram.dense(c, A, ["<="] * nr, b, sense="max")) == primal.value
    else:
        assert primal.status == "unbounded" and dual.status == "infeasible"


@given(hst.integers(0, 10 ** 6))
def test_exact_and_float_agree(seed):
    c, A, rels, b = _random_lp(random.Random(seed))
    lp = LinearProgram.dense(c, A, rels, b, sense="max")
    ex, fl = solve(lp, "exact"), solve(lp, "float")
    assert ex.status == fl.status
    if ex.status == "optimal":
        assert isinstance(ex.value, Fraction)
        assert abs(float(ex.value) - fl.value) <= 1e-7 * (1 + abs(fl.value))
        assert ex.dual_objective(lp) == ex.value
        x = ex.primal
        for coeffs, rel, rhs in lp.rows:
            lhs = sum(a * x[j] for j, a in coeffs.items())
            assert {"<=": lhs <= rhs, ">=": lhs >= rhs, "=": lhs == rhs}[rel]


@given(hst.integers(0, 10 ** 6))
def test_complementary_slackness_exact(seed):
    c, A, rels, b = _random_lp(random.Random(seed))
    lp = LinearProgram.dense(c, A, rels, b, sense="max")
    sol = solve(lp)
    if sol.status != "optimal":
        return
    for (coeffs, rel, rhs), y in zip(lp.rows, sol.dual):
        slack = rhs - sum(a * sol.primal[j] for j, a in coeffs.items())
        assert slack * y == 0
    for j, d in enumerate(sol.reduced_costs):
        assert d * sol.primal[j] == 0


def test_deterministic():
    c, A, rels, b = _random_lp(random.Random(3))
    lp = LinearProgram.dense(c, A, rels, b, sense="max")
    assert solve(lp).primal == solve(lp).primal


def _row_oracle(M):
    def oracle(mu, exact):
        vals = [sum(Fraction(a) * Fraction(m) if exact else a * m for a, m in zip(row, mu)) for row in M]
        k = max(range(len(M)), key=lambda r: (vals[r], -r))
        return vals[k], M[k], k
    return oracle


def test_matching_pennies():
    M = [[1, 0], [0, 1]]
    res = solve_zero_sum(2, _row_oracle(M), [(M[0], 0)])
    assert res.value == Fraction(1, 2)


def test_no_cut_oracle_keeps_initial_optimum():
    def oracle(mu, exact):
        return 0, [0, 0], "never"
    res = solve_zero_sum(2, oracle, [([1, 0], 0)])
    assert res.value == 0


@pytest.mark.parametrize("seed", range(20))
def test_cutting_plane_matches_full_game(seed):
    rng = np.random.default_rng(seed)
    M = rng.integers(0, 5, size=(rng.integers(2, 9), rng.integers(2, 6))).tolist()
    res = solve_zero_sum(len(M[0]), _row_oracle(M), [(M[0], 0)])
    # min over column mixtures of max row payoff = max over row mixtures of min column payoff
    assert abs(float(res.value) - matrix_game_value(M)) <= 1e-9
