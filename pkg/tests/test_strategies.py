import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as hst

import oracles
from certgame.boolfn import CELL_CODE, and_fn, apind_fn, hamming, or_fn, parity_fn, promise_or_fn, to_str, tribes_fn
from certgame.strategies import (apind_strategy, certificate_hash_strategy, check_tree_paths,
                                 decision_tree_strategy, ec_hash_strategy, eval_exact, eval_monte_carlo,
                                 generic_hash_strategy, parity_tree, private_certificate_strategy, scan_tree,
                                 sensitivity_hash_strategy, tribes_exact, tribes_strategy, tribes_tree,
                                 tribes_uniqueness, uniform_index_strategy, uniform_private_strategy)
from conftest import partial_functions

E2 = math.e ** 2


def test_shared_index_promise_or3():
    f = promise_or_fn(3)
    assert eval_exact(uniform_index_strategy(f), f)[0] == Fraction(1, 3)


def test_private_uniform_parity2():
    f = parity_fn(2)
    assert eval_exact(uniform_private_strategy(f), f)[0] == Fraction(1, 4)


def test_private_certificate_or3():
    f = or_fn(3)
    s = private_certificate_strategy(f)
    assert eval_exact(s, f)[0] == Fraction(1, 3) == s.declared_bound


@pytest.mark.parametrize("f", [or_fn(3), and_fn(3), tribes_fn(2, 2)], ids=lambda f: f.label())
def test_certificate_hash_exact_bound(f):
    s = certificate_hash_strategy(f)
    worst, _ = eval_exact(s, f)
    assert worst >= s.declared_bound


def test_sensitivity_hash_single_edge():
    from certgame.boolfn import PartialBooleanFunction
    f = PartialBooleanFunction(2, {"00": 0, "01": 1})
    s = sensitivity_hash_strategy(f)
    assert eval_exact(s, f)[0] == 1


def test_sensitivity_hash_needs_edges():
    from certgame.boolfn import gth_fn
    with pytest.raises(ValueError):
        sensitivity_hash_strategy(gth_fn(4))


def test_ec_hash_rejects_infeasible_witness():
    f = or_fn(2)
    w = {z: [Fraction(1, 4)] * 2 for z in f.domain}
    with pytest.raises(ValueError):
        ec_hash_strategy(f, w)


@pytest.mark.parametrize("f", [or_fn(4), parity_fn(3)], ids=lambda f: f.label())
def test_ec_hash_exact(f):
    s = ec_hash_strategy(f)
    assert eval_exact(s, f)[0] >= s.declared_bound


@pytest.mark.parametrize("make,f", [
    (certificate_hash_strategy, tribes_fn(2, 2)),
    (uniform_private_strategy, parity_fn(3)),
    (lambda f: decision_tree_strategy(f, scan_tree(3)), or_fn(3)),
])
def test_exact_matches_monte_carlo(make, f):
    s = make(f)
    worst, pair = eval_exact(s, f)
    row = eval_monte_carlo(s, [pair], 40000, 11, bound=worst)[0]
    lo, hi = row["ci99"]
    assert lo <= float(worst) <= hi


@settings(max_examples=10)
@given(partial_functions(min_n=2, max_n=3), hst.integers(0, 1000))
def test_referee_is_the_only_judge(f, seed):
    s = certificate_hash_strategy(f)
    draws = np.arange(64)
    for x, y in f.pairs()[:6]:
        a, b = s.alice(x, seed, draws), s.bob(y, seed, draws)
        wins = s.referee(x, y, a, b)
        expect = [ai == bi and x[ai - 1] != y[ai - 1] for ai, bi in zip(a, b)]
        assert list(wins) == expect
        assert 0 <= s.exact_success(x, y) <= 1


def test_alice_output_ignores_bob_input():
    f = tribes_fn(2, 2)
    s = certificate_hash_strategy(f)
    draws = np.arange(100)
    x = f.zero_set[0]
    assert (s.alice(x, 5, draws) == s.alice(x, 5, draws)).all()
    pair = s.draw(5, 7)
    assert pair.alice(x) == int(s.alice(x, 5, np.array([7]))[0])


def test_monte_carlo_deterministic():
    f = or_fn(3)
    s = sensitivity_hash_strategy(f)
    pairs = f.pairs(1)
    assert eval_monte_carlo(s, pairs, 5000, 9) == eval_monte_carlo(s, pairs, 5000, 9)


@pytest.mark.parametrize("k", [2, 3])
def test_tribes_exact_against_string_oracle(k):
    s = tribes_strategy(k)
    for x, y in s.canonical_pairs():
        assert s.exact_success(x, y) == oracles.tribes_success(k, x, y)


def test_tribes_closed_form_worst_pair():
    for k in (2, 3):
        s = tribes_strategy(k)
        for b in range(k):
            x, y = s.canonical_pair([0] * k, b)
            assert s.exact_success(x, y) == Fraction(1, k) * Fraction(k - 1, k) ** b


def test_tribes_all_inputs_k2():
    f = tribes_fn(2, 2)
    s = tribes_strategy(2)
    assert eval_exact(s, f)[0] == Fraction(1, 4)


def test_tribes_uniqueness_k3():
    assert tribes_uniqueness(3) == Fraction(4, 9)


def test_tribes_rejects_wrong_side():
    s = tribes_strategy(2)
    with pytest.raises(ValueError):
        s.features_x("1100")
    with pytest.raises(ValueError):
        tribes_strategy(1)


def test_tree_strategy_parity3():
    f = parity_fn(3)
    s = decision_tree_strategy(f, parity_tree(3))
    worst, _ = eval_exact(s, f)
    assert worst == Fraction(1, 3)
    assert all(s.exact_success(x, y) == Fraction(1, 3) for x, y in f.pairs(1))


def test_tree_strategy_or3_worst_pair():
    f = or_fn(3)
    s = decision_tree_strategy(f, scan_tree(3))
    assert s.exact_success("000", "001") == Fraction(1, 3)


def test_tree_strategy_tribes():
    f = tribes_fn(2, 2)
    s = decision_tree_strategy(f, tribes_tree(2, 2))
    assert eval_exact(s, f)[0] >= s.declared_bound


def test_tree_distribution_error_rejected():
    f = or_fn(2)
    with pytest.raises(ValueError):
        decision_tree_strategy(f, [(1, scan_tree(2)), (1, ("leaf", 0))])


def test_randomised_trees_bound():
    f = or_fn(3)
    trees = [(1, scan_tree(3, order=[1, 2, 3])), (1, scan_tree(3, order=[3, 1, 2])), (1, scan_tree(3, order=[2, 3, 1]))]
    s = decision_tree_strategy(f, trees)
    check_tree_paths(f, trees)
    assert eval_exact(s, f)[0] >= s.declared_bound


def test_generic_hash_degenerate_range():
    W = set(range(40))
    with pytest.raises(ValueError):
        generic_hash_strategy({"a": W}, {"b": W}, 40, 20)
    s = generic_hash_strategy({"a": W}, {"b": W}, 40, 20, allow_single_bucket=True)
    assert eval_exact(s, pairs=[("a", "b")])[0] >= Fraction(1, 7200)


def test_generic_hash_disjoint_sets():
    s = generic_hash_strategy({"a": set(range(10))}, {"b": set(range(10, 20))}, 10, 1)
    assert eval_exact(s, pairs=[("a", "b")])[0] == 0


def test_generic_hash_synthetic():
    s = generic_hash_strategy({"x": set(range(64))}, {"y": set(range(48, 112))}, 64, 4)
    assert s.size == 8
    assert eval_exact(s, pairs=[("x", "y")])[0] >= Fraction(1, 288)


def test_apind_far_pair_k16():
    s = apind_strategy(16)
    x, y = (0, 0), ((1 << 4) - 1, 1)
    assert s.exact_success(x, y) >= Fraction(1, 2 * 4)


def test_apind_equal_addresses():
    s = apind_strategy(16)
    x, y = (5, 0), (5, 1)
    # address bits never differ; the whole ball is a correct answer
    assert s.exact_success(x, y) == Fraction(1, 2)


@pytest.mark.parametrize("k", [2, 3])
def test_apind_native_matches_encoding(k):
    f = apind_fn(k)
    s = apind_strategy(k)
    encode = {}
    for a in range(1 << k):
        for v in (0, 1):
            cells = "".join(CELL_CODE[s.table_value((a, v), c)] for c in range(1 << k))
            encode[a, v] = to_str(a, k) + cells
            assert f.values[encode[a, v]] == v
    for (a, va), x in encode.items():
        for (b, vb), y in encode.items():
            if va != 0 or vb != 1:
                continue
            for c in range(1 << k):
                native = s.referee((a, 0), (b, 1), np.array([k + 1 + c]), np.array([k + 1 + c]))[0]
                # the cell differs in the encoding exactly when the native table differs
                pos = k + 2 * c
                assert native == (x[pos:pos + 2] != y[pos:pos + 2])
            mc = eval_monte_carlo(s, [((a, 0), (b, 1))], 20000, 4, bound=s.exact_success((a, 0), (b, 1)))[0]
            lo, hi = mc["ci99"]
            assert lo - 1e-9 <= float(s.exact_success((a, 0), (b, 1))) <= hi + 1e-9


def test_apind_count_path_matches_exact():
    s = apind_strategy(64)
    x, y = (0, 0), ((1 << 10) - 1, 1)
    row = eval_monte_carlo(s, [(x, y)], 100000, 5)[0]
    lo, hi = row["ci99"]
    assert lo <= s.exact_success(x, y) <= hi
