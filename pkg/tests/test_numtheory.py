import numpy as np
import pytest
from hypothesis import given, strategies as st

from zeroseq.numtheory import (
    is_prime,
    legendre,
    legendre_seq,
    legendre_zs_blocks,
    liouville_ap_zs,
    liouville_sieve,
    liouville_trial_division,
    liouville_zs_blocks,
    prime_sieve,
)
from zeroseq.thresholds import ParameterError


def naive_primes(limit):
    return [p for p in range(2, limit + 1) if all(p % q for q in range(2, p))]


def test_liouville_first_values():
    t = liouville_sieve(10)
    assert t.values.tolist() == [1, -1, -1, 1, -1, 1, -1, -1, 1, 1]
    assert t[4] == 1 and t[8] == -1
    with pytest.raises(IndexError):
        t[11]


def test_liouville_small_blocks():
    rep = liouville_zs_blocks(10, 2)
    # lambda(1..10) = + - - + - + - - + +
    assert rep.first_starts == [1, 3, 4, 5, 6, 8]
    assert rep.count == 6 and rep.partial_sum == 0


def test_sieve_matches_trial_division():
    t = liouville_sieve(3000)
    assert all(t[n] == liouville_trial_division(n) for n in range(1, 3001))


@given(st.integers(1, 10**6))
def test_trial_division_is_completely_multiplicative(n):
    for p in (2, 3, 5):
        assert liouville_trial_division(n * p) == -liouville_trial_division(n)


@pytest.mark.parametrize("limit", [1, 2, 3, 100, 1000, 5003])
def test_prime_sieve(limit):
    assert prime_sieve(limit).tolist() == naive_primes(limit)


def test_prime_sieve_segments():
    assert (prime_sieve(50_000, segment=977) == prime_sieve(50_000)).all()


def test_legendre_by_squares():
    for p in (3, 5, 7, 11, 13):
        squares = {x * x % p for x in range(1, p)}
        for a in range(-2 * p, 2 * p):
            expect = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre(a, p) == expect


@pytest.mark.parametrize("p", [1, 2, 4, 9])
def test_legendre_rejects(p):
    with pytest.raises(ParameterError):
        legendre(1, p)


def test_legendre_seq_skips_p():
    s = legendre_seq(5, 30)
    assert 5 not in s.primes.tolist()
    assert set(s.values.tolist()) <= {-1, 1}
    assert s.values.tolist()[:4] == [-1, -1, -1, 1]


def test_legendre_blocks_brute_force():
    p, limit, k = 7, 500, 4
    vals = [legendre(q, p) for q in naive_primes(limit) if q != p]
    starts = [i + 1 for i in range(len(vals) - k + 1) if sum(vals[i:i + k]) == 0]
    rep = legendre_zs_blocks(p, limit, k)
    assert rep.count == len(starts) and rep.first_starts == starts[:10]
    assert rep.partial_sum == sum(vals)


def test_liouville_ap_brute_force():
    limit, k, d = 2000, 4, 3
    lam = [liouville_trial_division(n) for n in range(d, limit + 1, d)]
    starts = [i + 1 for i in range(len(lam) - k + 1) if sum(lam[i:i + k]) == 0]
    rep = liouville_ap_zs(limit, k, d)
    assert rep.count == len(starts) and rep.first_starts == starts[:10]


@pytest.mark.parametrize("k", [0, 3, -2])
def test_rejects_odd_k(k):
    with pytest.raises(ParameterError):
        liouville_zs_blocks(100, k)


def test_rejects_short_inputs():
    with pytest.raises(ParameterError):
        liouville_zs_blocks(3, 4)
    with pytest.raises(ParameterError):
        legendre_zs_blocks(3, 10, 8)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == naive_primes(29)


def test_report_json():
    out = liouville_zs_blocks(100, 2).to_json()
    assert set(out) == {"count", "first_starts", "partial_sum"}
    assert isinstance(out["count"], int)
    assert np.all(np.diff(out["first_starts"]) > 0)


def test_legendre_residue_sets_to_97():
    for p in naive_primes(97)[1:]:
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            expect = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, p) == expect


def test_reported_blocks_are_zero_sum():
    t = liouville_sieve(5000)
    for k in (2, 4, 6):
        rep = liouville_zs_blocks(5000, k, t)
        for a in rep.first_starts:
            assert sum(t[i] for i in range(a, a + k)) == 0
