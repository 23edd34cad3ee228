import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as hst

import oracles
from certgame.boolfn import (PartialBooleanFunction, all_total_functions, gth_fn, or_fn, parity_fn,
                             promise_or_fn, tribes_fn)
from certgame.games import (cg_ns, cg_private_bounds, cg_pub, cg_pub_single_bit, cg_single_bit, fc_feasible,
                            fc_from_public, ns_check, verify_ns, verify_public)
from certgame.linprog import CapError
from certgame.measures import fractional_certificate, spectral_sensitivity
from conftest import partial_functions


def negate(f):
    return PartialBooleanFunction(f.n, {z: 1 - v for z, v in f.values.items()})


def permute(f, perm):
    return PartialBooleanFunction(f.n, {"".join(z[p] for p in perm): v for z, v in f.values.items()})


def small_enough(f):
    return len(f.zero_set) + len(f.one_set) <= 7


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ns_promise_or(n):
    rep = cg_ns(promise_or_fn(n))
    assert rep.value == n
    assert verify_ns(promise_or_fn(n), rep)


@pytest.mark.parametrize("f,value", [(parity_fn(2), 2), (gth_fn(4), Fraction(3, 2)), (gth_fn(6), 2),
                                     (gth_fn(8), Fraction(5, 2)), (or_fn(3), 3)])
def test_ns_values(f, value):
    rep = cg_ns(f)
    assert rep.value == value and verify_ns(f, rep)
    ok, violation = ns_check(rep.certificates["ns_strategy"])
    assert ok and violation == 0


@pytest.mark.parametrize("f", all_total_functions(2), ids=lambda f: f.label())
def test_ns_matches_independent_lp(f):
    assert abs(float(cg_ns(f).value) - oracles.ns_value(f)) < 1e-7


@settings(max_examples=15)
@given(partial_functions(max_n=3))
def test_ns_matches_independent_lp_partial(f):
    assert abs(float(cg_ns(f).value) - oracles.ns_value(f)) < 1e-7


@pytest.mark.parametrize("f,value", [(or_fn(2), 2), (parity_fn(2), 2), (or_fn(3), 3), (gth_fn(4), 2),
                                     (gth_fn(8), Fraction(8, 3))])
def test_pub_values(f, value):
    rep = cg_pub(f, "exact")
    assert rep.value == value
    assert verify_public(f, rep)
    assert fc_feasible(f, fc_from_public(f, rep))


@pytest.mark.parametrize("f", all_total_functions(2), ids=lambda f: f.label())
def test_pub_matches_enumeration(f):
    assert abs(float(cg_pub(f).value) - oracles.public_value(f)) < 1e-7


@settings(max_examples=15)
@given(partial_functions(max_n=3).filter(small_enough))
def test_pub_matches_enumeration_partial(f):
    assert abs(float(cg_pub(f).value) - oracles.public_value(f)) < 1e-7


@settings(max_examples=15)
@given(partial_functions(max_n=3).filter(small_enough))
def test_pub_restricted_to_one_bit(f):
    if not f.pairs(1):
        return
    assert abs(float(cg_pub(f, distance=1).value) - oracles.public_value(f, distance=1)) < 1e-7


@settings(max_examples=20)
@given(partial_functions(max_n=3), hst.permutations([0, 1, 2]))
def test_values_invariant_under_negation_and_relabelling(f, perm):
    perm = [p for p in perm if p < f.n]
    ns, pub = cg_ns(f).value, cg_pub(f).value
    assert cg_ns(negate(f)).value == ns and cg_pub(negate(f)).value == pub
    g = permute(f, perm)
    assert cg_ns(g).value == ns and cg_pub(g).value == pub


@settings(max_examples=20)
@given(partial_functions(max_n=3))
def test_hierarchy(f):
    fc = fractional_certificate(f).value
    ns = cg_ns(f).value
    pub = cg_pub(f).value
    assert fc <= ns <= pub


@pytest.mark.parametrize("f", [or_fn(3), gth_fn(4), parity_fn(3)], ids=lambda f: f.label())
def test_interval_mode_brackets_exact(f):
    exact = cg_pub(f, "exact").value
    rep = cg_pub(f, "interval", seed=3)
    assert rep.lower <= exact <= rep.upper


def test_pub_cap():
    with pytest.raises(CapError):
        cg_pub(parity_fn(6), "exact")


@pytest.mark.parametrize("f,value", [(parity_fn(2), 4), (or_fn(3), 3), (tribes_fn(2, 2), 4)])
def test_private_sandwich(f, value):
    rep = cg_private_bounds(f)
    assert rep.exact and rep.lower == rep.upper == value


def test_single_bit_parity3():
    rep = cg_single_bit(parity_fn(3))
    assert abs(rep.value - 9) < 1e-9
    assert not rep.flags
    assert abs(rep.certificates["weight_program_upper"] - 9) < 1e-6


def test_single_bit_needs_edges():
    with pytest.raises(ValueError):
        cg_single_bit(gth_fn(4))


@pytest.mark.parametrize("f", [or_fn(2), or_fn(3), parity_fn(2), parity_fn(3)], ids=lambda f: f.label())
def test_pub_single_bit_in_interval(f):
    rep = cg_pub_single_bit(f)
    s, top = rep.certificates["closed_form"]
    assert s <= rep.value <= top
    lo, hi = rep.certificates["bounds"]
    assert lo <= rep.value <= hi


def test_pub_single_bit_interval_without_exact():
    rep = cg_pub_single_bit(or_fn(6), exact_limit=0)
    assert not rep.exact
    assert rep.lower <= rep.upper <= math.e ** 2 * 6 + 1e-9
