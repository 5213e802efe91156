from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zeroseq.thresholds import (
    BlockParams,
    GapParams,
    ParameterError,
    block_formula,
    block_threshold,
    gap_threshold,
    lambda_ceil,
    lambda_floor,
    level_set,
    residue_s,
    zero_in_level_set,
)


@pytest.mark.parametrize("args,s", [((6, 0, 0), 0), ((6, 0, 1), 1), ((7, 1, 4), 0)])
def test_residue_s(args, s):
    assert residue_s(*args) == s


@pytest.mark.parametrize("args,N", [((6, 0, 0), 9), ((6, 0, 1), 10), ((7, 1, 4), 17)])
def test_block_threshold_reference_values(args, N):
    assert block_threshold(*args) == N


@pytest.mark.parametrize("args", [(6, 1, 0), (7, 0, 0), (6, 6, 0), (6, 8, 0), (6, 0, -1)])
def test_block_threshold_rejects(args):
    with pytest.raises(ParameterError):
        block_threshold(*args)


def test_block_threshold_small_formula_falls_back_to_k():
    # (4, 2, 0): formula 1 <= k
    assert block_formula(4, 2, 0) == 1
    assert block_threshold(4, 2, 0) == 4


def test_zero_sum_specialisation():
    # t = 0: max{k, k^2/4 + (q-s)k/2 + s}
    for k in range(2, 30, 2):
        for q in range(6):
            s = residue_s(k, 0, q)
            assert s in (0, 1)
            expect = max(k, Fraction(k * k, 4) + Fraction((q - s) * k, 2) + s)
            assert block_threshold(k, 0, q) == expect


def test_one_sum_specialisation():
    # t = 1: max{k, k^2/6 + (q-s)k/3 + s - 1/2}
    for k in range(3, 31, 2):
        for q in range(6):
            s = residue_s(k, 1, q)
            assert s in (0, 1, 2)
            expect = max(k, Fraction(k * k, 6) + Fraction((q - s) * k, 3) + s - Fraction(1, 2))
            assert block_threshold(k, 1, q) == expect


@given(st.integers(1, 60), st.integers(0, 59), st.integers(0, 40))
def test_block_threshold_always_integral(k, t, q):
    if t >= k or (k - t) % 2:
        return
    p = BlockParams.of(k, t, q)
    assert 0 <= p.s_residue <= t + 1
    assert (p.s_residue - q - (k - t - 2) // 2) % (t + 2) == 0
    assert isinstance(p.n_threshold, int) and p.n_threshold >= k


@pytest.mark.parametrize("args,N", [((2, 6), 13), ((2, 8), 19), ((3, 6), 17)])
def test_gap_threshold_examples(args, N):
    assert gap_threshold(*args) == N


def test_gap_threshold_small_k():
    assert gap_threshold(2, 2) == 2
    assert gap_threshold(2, 4) == 4
    assert gap_threshold(5, 4) == 7


@pytest.mark.parametrize("args", [(1, 6), (2, 7), (2, 0)])
def test_gap_threshold_rejects(args):
    with pytest.raises(ParameterError):
        gap_threshold(*args)


@given(st.integers(2, 20), st.integers(1, 30))
def test_gap_threshold_integral(d, half):
    p = GapParams.of(d, 2 * half)
    assert p.s_residue == (half - 1) % 2
    assert isinstance(p.n_threshold, int)


def test_level_sets():
    assert level_set(1, 1, 4).values == (-4, -2, 0, 2, 4)
    assert level_set(2, 3, 5).values == (-10, -5, 0, 5, 10, 15)
    assert level_set(2, 3, 4).values == (-8, -3, 2, 7, 12)


def test_level_set_brute_force():
    for r in range(1, 4):
        for s in range(1, 4):
            for m in range(1, 7):
                brute = {-r * x + s * (m - x) for x in range(m + 1)}
                assert set(level_set(r, s, m).values) == brute


def test_brackets():
    assert (lambda_floor(1, 1, 1, 4), lambda_ceil(1, 1, 1, 4)) == (0, 2)
    assert (lambda_floor(0, 2, 3, 5), lambda_ceil(0, 2, 3, 5)) == (0, 0)
    assert (lambda_floor(1, 2, 3, 4), lambda_ceil(1, 2, 3, 4)) == (-3, 2)


def test_brackets_reject_out_of_range():
    with pytest.raises(ParameterError):
        lambda_floor(5, 1, 1, 4)
    with pytest.raises(ParameterError):
        lambda_ceil(Fraction(-9, 2), 1, 1, 4)


def test_zero_membership():
    assert zero_in_level_set(1, 1, 4)
    assert zero_in_level_set(2, 3, 5)
    assert not zero_in_level_set(2, 3, 4)
    for r in range(1, 6):
        for s in range(1, 6):
            for m in range(1, 13):
                assert zero_in_level_set(r, s, m) == (0 in level_set(r, s, m))


rsm = st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 8))


@given(rsm, st.data())
def test_bracket_properties(params, data):
    r, s, m = params
    num = data.draw(st.integers(-r * m * 7, s * m * 7))
    q = Fraction(num, 7)
    L = level_set(r, s, m)
    lo, hi = lambda_floor(q, r, s, m), lambda_ceil(q, r, s, m)
    assert lo <= q <= hi
    assert (lo == hi == q) == (q in L.values)
    assert hi - lo in (0, r + s)
    assert lo in L and hi in L
    for c in (1, 2, 3, 5):
        assert c * lo <= lambda_floor(q * c, r, s, m * c)
        assert c * hi >= lambda_ceil(q * c, r, s, m * c)
