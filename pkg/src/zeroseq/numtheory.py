"""Liouville and Legendre sign sequences and their zero-sum blocks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .search import zs_block_starts
from .thresholds import ParameterError

FIRST_STARTS = 10


@dataclass(frozen=True)
class LiouvilleTable:
    """lambda(1..limit); ``values[i-1]`` is lambda(i)."""

    limit: int
    values: np.ndarray
    partials: np.ndarray

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(n)
        return int(self.values[n - 1])


@dataclass(frozen=True)
class LegendreSeq:
    p: int
    primes: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class ZSReport:
    """Zero-sum block count for a +-1 sequence and its first start positions."""

    count: int
    first_starts: list[int]
    partial_sum: int
    length: int

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "first_starts": self.first_starts,
            "partial_sum": self.partial_sum,
        }


def prime_sieve(limit: int, segment: int = 1 << 18) -> np.ndarray:
    """All primes <= limit, by a segmented sieve of Eratosthenes."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    root = math.isqrt(limit)
    small = np.ones(root + 1, dtype=bool)
    small[:2] = False
    for i in range(2, math.isqrt(root) + 1):
        if small[i]:
            small[i * i:: i] = False
    base = np.flatnonzero(small)
    chunks = [base]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + segment, limit + 1)
        mark = np.ones(hi - lo, dtype=bool)
        for p in base:
            first = max(p * p, -(-lo // p) * p)
            if first >= hi:
                continue
            mark[first - lo:: p] = False
        chunks.append(np.flatnonzero(mark) + lo)
        lo = hi
    return np.concatenate(chunks).astype(np.int64)


def big_omega(limit: int) -> np.ndarray:
    """Omega(n) (prime factors with multiplicity) for n = 0..limit."""
    omega = np.zeros(limit + 1, dtype=np.int64)
    for p in prime_sieve(limit).tolist():
        pk = p
        while pk <= limit:
            omega[pk::pk] += 1
            pk *= p
    return omega


def liouville_sieve(limit: int) -> LiouvilleTable:
    if limit < 1:
        raise ParameterError("limit must be at least 1")
    omega = big_omega(limit)[1:]
    values = np.where(omega % 2 == 0, 1, -1).astype(np.int64)
    return LiouvilleTable(limit, values, np.cumsum(values))


def liouville_trial_division(n: int) -> int:
    """lambda(n) by factoring n directly."""
    count, x, p = 0, n, 2
    while p * p <= x:
        while x % p == 0:
            x //= p
            count += 1
        p += 1
    if x > 1:
        count += 1
    return -1 if count % 2 else 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, math.isqrt(n) + 1, 2))


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ParameterError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _require_odd_prime(p)
    e = pow(a % p, (p - 1) // 2, p)
    if e == 0:
        return 0
    return 1 if e == 1 else -1


def legendre_seq(p: int, limit: int) -> LegendreSeq:
    """(q/p) over the primes q <= limit, skipping q = p (the only zero)."""
    _require_odd_prime(p)
    primes = prime_sieve(limit)
    primes = primes[primes != p]
    table = np.array([legendre(a, p) for a in range(p)], dtype=np.int64)
    return LegendreSeq(p, primes, table[primes % p])


def _report(values: np.ndarray, k: int) -> ZSReport:
    starts = zs_block_starts(values, k)
    return ZSReport(
        count=int(starts.size),
        first_starts=starts[:FIRST_STARTS].tolist(),
        partial_sum=int(values.sum()),
        length=int(values.size),
    )


def _require_even(k: int) -> None:
    if k < 2 or k % 2:
        raise ParameterError(f"k must be even and at least 2, got {k}")


def liouville_zs_blocks(limit: int, k: int, table: LiouvilleTable | None = None) -> ZSReport:
    """Zero-sum k-blocks lambda(n) + ... + lambda(n+k-1) = 0 with n+k-1 <= limit."""
    _require_even(k)
    if k > limit:
        raise ParameterError(f"k={k} exceeds limit {limit}")
    table = table if table is not None else liouville_sieve(limit)
    return _report(table.values[:limit], k)


def liouville_ap_zs(limit: int, k: int, d: int, table: LiouvilleTable | None = None) -> ZSReport:
    """Zero-sum k-blocks of lambda(d), lambda(2d), ... (terms <= limit).

    Starts are indices j into the dilated sequence; the AP is
    {j*d, (j+1)*d, ..., (j+k-1)*d}.
    """
    _require_even(k)
    if d < 1:
        raise ParameterError("d must be positive")
    table = table if table is not None else liouville_sieve(limit)
    dilated = table.values[d - 1: limit: d]
    if k > dilated.size:
        raise ParameterError(f"only {dilated.size} multiples of {d} up to {limit}")
    return _report(dilated, k)


def legendre_zs_blocks(p: int, limit: int, k: int) -> ZSReport:
    """Zero-sum k-blocks of consecutive primes under q -> (q/p)."""
    _require_even(k)
    seq = legendre_seq(p, limit)
    if k > seq.values.size:
        raise ParameterError(f"only {seq.values.size} primes up to {limit}")
    return _report(seq.values, k)
