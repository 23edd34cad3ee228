import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as hst

import oracles
from certgame.hamming import (HypergeomParams, ball_intersection, ball_intersection_ratio, ball_size, binomial,
                              brute_force_intersection, check_monotone, check_symmetric, hypergeom_pmf,
                              log_scale_params, outer_layer_mass, sphere_ball_intersection, tail_mass)


def test_binomials():
    assert binomial(10, 4) == 210
    assert binomial(7, 0) == 1
    assert binomial(52, 26) == oracles.pascal(52, 26) == 495918532948104
    assert binomial(3, 5) == 0


def test_pmf_examples():
    p = HypergeomParams(4, 2, 2)
    assert hypergeom_pmf(p, 1) == Fraction(2, 3)
    assert hypergeom_pmf(p, 3) == 0
    assert hypergeom_pmf(HypergeomParams(10, 2, 9), 0) == 0


def test_bad_params():
    with pytest.raises(ValueError):
        HypergeomParams(4, 5, 2)


@pytest.mark.parametrize("seed", range(50))
def test_pmf_sums_to_one(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 60)
    p = HypergeomParams(k, rng.randint(0, k), rng.randint(0, k))
    assert sum(hypergeom_pmf(p, j) for j in range(p.m + 1)) == 1


def test_intersection_example():
    assert sphere_ball_intersection(10, 2, 4) == (140, Fraction(2, 3))
    assert brute_force_intersection("0" * 10, "11" + "0" * 8, 4) == 140


def test_identical_centres():
    for r in range(6):
        assert sphere_ball_intersection(5, 0, r)[1] == 1
        assert brute_force_intersection("01011", "01011", r) == binomial(5, r)


def test_radius_zero():
    assert brute_force_intersection("0000", "0000", 0) == 1
    assert brute_force_intersection("0000", "0001", 0) == 0


def test_brute_force_cap():
    with pytest.raises(ValueError):
        brute_force_intersection("0" * 21, "0" * 21, 3)


@pytest.mark.parametrize("k", range(1, 15))
def test_formula_matches_brute_force(k):
    for m in range(k + 1):
        a, b = "0" * k, "1" * m + "0" * (k - m)
        for r in range(k + 1):
            assert brute_force_intersection(a, b, r) == sphere_ball_intersection(k, m, r)[0]


@pytest.mark.parametrize("k", range(1, 11))
def test_ball_intersection_matches_enumeration(k):
    for m in range(k + 1):
        a, b = 0, (1 << m) - 1
        for r in range(k + 1):
            count = sum(1 for z in range(1 << k) if bin(a ^ z).count("1") <= r and bin(b ^ z).count("1") <= r)
            assert ball_intersection(k, m, r) == count


@pytest.mark.parametrize("k", range(1, 15))
def test_ball_ratio_grows_as_centres_approach(k):
    for r in range(k + 1):
        ratios = [ball_intersection_ratio(k, m, r) for m in range(k + 1)]
        assert all(ratios[m] >= ratios[m + 1] for m in range(k))


def test_symmetric_identity_at_zero():
    c = check_symmetric(HypergeomParams(100, 10, 40), j_max=0)
    assert c.min_ratio == 1


def test_symmetric_small_case_against_direct_quotients():
    p = HypergeomParams(100, 10, 40)
    c = check_symmetric(p, j_max=2)
    direct = min(hypergeom_pmf(p, 5 + j) / hypergeom_pmf(p, 5 - j) for j in range(3))
    assert c.min_ratio == direct


def test_symmetric_odd_m_half_step():
    p = HypergeomParams(40, 7, 15)
    c = check_symmetric(p, j_max=2)
    direct = min(hypergeom_pmf(p, 4 + j) / hypergeom_pmf(p, 3 - j) for j in range(3))
    assert c.min_ratio == direct


def test_monotone_small_case():
    c = check_monotone(HypergeomParams(10, 2, 4))
    assert c.mode == 1


def test_monotone_degenerate():
    c = check_monotone(HypergeomParams(8, 8, 3))
    assert c.mode == 3 and c.unimodal


def test_monotone_log_scale_regime():
    p = log_scale_params(1024)
    c = check_monotone(p)
    assert c.unimodal and abs(c.mode - p.mean) <= 1


def test_tail_full_support():
    p = HypergeomParams(30, 6, 12)
    assert tail_mass(p, 6) == 1


def test_tail_transfer_to_sqrt_m():
    p = log_scale_params(1024)
    full = tail_mass(p, math.isqrt(p.r - 1) + 1)
    narrow = tail_mass(p, math.isqrt(p.m - 1) + 1)
    assert float(narrow) >= 0.72 * math.sqrt(p.m) / math.sqrt(p.r)
    assert full >= narrow


def test_outer_layer_equal_radii():
    assert outer_layer_mass(1024, const=1).ratio == 1


def test_outer_layer_scaled_constant_small_k():
    o = outer_layer_mass(4096, const=3)
    assert "scaled_constant" in o.flags
    assert 0 < o.ratio < 1


def test_outer_layer_negative_outer_radius():
    with pytest.raises(ValueError):
        outer_layer_mass(4)


def test_log_scale_params_1024():
    p = log_scale_params(1024)
    assert (p.m, p.r) == (102, 410)
    assert log_scale_params(4096, even_m=True).m % 2 == 0


@given(hst.integers(1, 40), hst.data())
def test_pure_functions(k, data):
    m = data.draw(hst.integers(0, k))
    r = data.draw(hst.integers(0, k))
    assert sphere_ball_intersection(k, m, r) == sphere_ball_intersection(k, m, r)
    p = HypergeomParams(k, m, r)
    assert tail_mass(p, 2) == sum(hypergeom_pmf(p, j) for j in reversed(range(m + 1))
                                  if abs(j - p.mean) <= 2)
    assert ball_size(k, r) == sum(binomial(k, j) for j in range(r + 1))
