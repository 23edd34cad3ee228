import json

import pytest
from hypothesis import given

from certgame.boolfn import (ParseError, all_total_functions, apind_fn, flip_block, from_truth_table, gth_fn,
                             hamming, or_fn, parse_zoo, promise_or_fn, sensitive_indices, tribes_fn, zoo)
from conftest import partial_functions


def test_compact_table_or2():
    f = from_truth_table({"n": 2, "table": "0111"})
    assert f.zero_set == ("00",)
    assert f.one_set == ("01", "10", "11")


def test_compact_table_with_undefined():
    f = from_truth_table('{"n": 2, "table": "01**"}')
    assert f.values == {"00": 0, "01": 1}


def test_json_values_form():
    f = from_truth_table('{"n": 2, "values": {"00": 0, "11": 1}}')
    assert len(f) == 2


@pytest.mark.parametrize("text", [
    '{"n": 2, "values": {"00": 0, "00": 1}}',
    '{"n": 2, "values": {"0": 0}}',
    '{"n": 2, "table": "01"}',
    '{"n": 2, "table": "****"}',
    '{"n": 2}',
    "not json",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        from_truth_table(text)


def test_round_trip():
    f = tribes_fn(2, 2)
    assert from_truth_table(f.to_json()).values == f.values


def test_gth4():
    f = zoo("GTH", 4)
    assert f.values == {"1000": 0, "0100": 0, "0010": 1, "0001": 1}


def test_gth_needs_even_n():
    with pytest.raises(ParseError):
        gth_fn(5)


def test_tribes22():
    f = zoo("TRIBES", 2, 2)
    for z, v in f.values.items():
        x = [int(c) for c in z]
        assert v == int((x[0] and x[1]) or (x[2] and x[3]))


def test_promise_or3():
    f = zoo("PROMISE_OR", 3)
    assert f.values == {"000": 0, "001": 1, "010": 1, "100": 1}


@pytest.mark.parametrize("bad", ["foo:3", "or:x", "tribes:5,5"])
def test_zoo_errors(bad):
    with pytest.raises(ParseError):
        parse_zoo(bad)


def test_sensitive_indices_examples():
    assert sensitive_indices(or_fn(3), "000") == {1, 2, 3}
    assert sensitive_indices(gth_fn(4), "1000") == set()
    assert sensitive_indices(zoo("PARITY", 2), "01") == {1, 2}


def test_hamming_helpers():
    assert hamming("0011", "0101") == 2
    assert hamming("0110", "0110") == 0
    assert flip_block("0000", [1, 3]) == "1010"
    with pytest.raises(ValueError):
        hamming("01", "011")


def test_total_function_count_n3():
    assert len(all_total_functions(3)) == 218
    assert len(all_total_functions(3, nondegenerate=False)) == 254


@pytest.mark.parametrize("s,t", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 3)])
def test_tribes_matches_dnf(s, t):
    f = tribes_fn(s, t)
    n = s * t
    table = "".join(str(int(any(all(((c >> (n - 1 - (b * t + j))) & 1) for j in range(t)) for b in range(s))))
                    for c in range(1 << n))
    assert from_truth_table({"n": n, "table": table}).values == f.values


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_promise_or_is_restriction(n):
    f, g = promise_or_fn(n), or_fn(n)
    assert all(g.values[z] == v for z, v in f.values.items())


def test_apind_encoding():
    f = apind_fn(2)
    assert f.n == 2 + 2 * 4
    assert len(f) == 2 * 4
    # radius 0: only the addressed cell carries the value
    z = "10" + "10" + "10" + "00" + "10"
    assert f.values[z] == 0


@given(partial_functions(max_n=4))
def test_sensitivity_symmetric_on_edges(f):
    for z in f.domain:
        for i in sensitive_indices(f, z):
            w = flip_block(z, [i])
            assert i in sensitive_indices(f, w)
