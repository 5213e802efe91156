import numpy as np
import pytest
from hypothesis import given, strategies as st

from zeroseq.seq import (
    ARITHMETIC,
    GAP,
    BlockWitness,
    SequenceError,
    SignedSeq,
    parse_seq,
    weight_of,
    window_weight,
    window_weights,
)

pm1_lists = st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=40)


def test_parse_extremal_pattern():
    f = parse_seq("--++++--")
    assert f.n == 8
    assert f.total == 0
    assert list(f.values) == [-1, -1, 1, 1, 1, 1, -1, -1]


def test_parse_single_plus():
    f = parse_seq("+")
    assert (f.n, f.total) == (1, 1)


def test_parse_integer_list():
    f = parse_seq("-3 5 -3", r=3, s_val=5)
    assert (f.n, f.total) == (3, -1)


def test_parse_symbols_map_to_alphabet():
    f = parse_seq("+-", r=2, s_val=3)
    assert list(f.values) == [3, -2]


def test_parse_comments_and_whitespace():
    f = parse_seq("# header\n+ - +\n# trailer\n-\n")
    assert f.to_text() == "+-+-"


@pytest.mark.parametrize("text", ["", "   \n", "# only a comment", "+x-", "1 2", "-1 0 1"])
def test_parse_rejects(text):
    with pytest.raises(SequenceError):
        parse_seq(text)


def test_parse_rejects_value_outside_alphabet():
    with pytest.raises(SequenceError):
        parse_seq("-3 5 4", r=3, s_val=5)


def test_window_weight_examples():
    f = parse_seq("--++++--")
    assert window_weight(f, 1, 6) == 2
    assert window_weight(f, 3, 6) == 2
    assert window_weight(f, 1, 8) == f.total


@pytest.mark.parametrize("i,k", [(0, 2), (8, 2), (1, 9), (3, 0)])
def test_window_weight_out_of_range(i, k):
    with pytest.raises(SequenceError):
        window_weight(parse_seq("--++++--"), i, k)


def test_weight_of_examples():
    f = parse_seq("+-+-")
    assert weight_of(f, [1, 3]) == 2
    assert weight_of(f, [1, 2, 3, 4]) == 0
    assert weight_of(parse_seq("--++++--"), [2, 4, 6, 8]) == 0


def test_weight_of_out_of_range():
    with pytest.raises(SequenceError):
        weight_of(parse_seq("+-"), [3])


def test_sequence_is_immutable():
    f = parse_seq("+-+")
    with pytest.raises(ValueError):
        f.values[0] = -1


def test_text_round_trip_general_alphabet():
    f = SignedSeq(np.array([-2, 3, 3]), 2, 3)
    assert parse_seq(f.to_text(), 2, 3) == f


@given(pm1_lists)
def test_prefix_invariants(vals):
    f = SignedSeq(np.array(vals))
    assert len(f.prefix) == f.n + 1
    assert f.prefix[0] == 0
    assert all(f.prefix[i] - f.prefix[i - 1] == vals[i - 1] for i in range(1, f.n + 1))
    assert f.total == sum(vals)


@given(pm1_lists, st.data())
def test_window_weight_matches_weight_of(vals, data):
    f = SignedSeq(np.array(vals))
    k = data.draw(st.integers(1, f.n))
    i = data.draw(st.integers(1, f.n - k + 1))
    assert window_weight(f, i, k) == weight_of(f, range(i, i + k))
    assert window_weight(f, i, k) % 2 == k % 2


@given(st.lists(st.sampled_from([-2, 3]), min_size=2, max_size=30), st.data())
def test_adjacent_windows_differ_by_zero_or_r_plus_s(vals, data):
    f = SignedSeq(np.array(vals), 2, 3)
    k = data.draw(st.integers(1, f.n - 1))
    w = window_weights(f, k)
    assert set(np.abs(np.diff(w)).tolist()) <= {0, 5}


def test_witness_invariants():
    BlockWitness((2, 4, 5), 0, GAP, 2)
    BlockWitness((1, 4, 7), 0, ARITHMETIC, 3)
    with pytest.raises(ValueError):
        BlockWitness((1, 2, 4), 0)
    with pytest.raises(ValueError):
        BlockWitness((1, 4), 0, GAP, 2)
    with pytest.raises(ValueError):
        BlockWitness((1, 3, 4), 0, ARITHMETIC, 2)
    with pytest.raises(ValueError):
        BlockWitness((3, 2), 0, GAP, 2)


def test_witness_check_recomputes_weight():
    f = parse_seq("+-+-")
    assert BlockWitness((1, 2), 0).check(f)
    assert not BlockWitness((1, 2), 2).check(f)
    assert not BlockWitness((4, 5), 0).check(f)
