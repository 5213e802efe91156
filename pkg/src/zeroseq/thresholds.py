"""Exact threshold arithmetic and the level sets L(r, s, m).

Everything here is exact: integers and :class:`fractions.Fraction` only.
An off-by-one in a threshold silently breaks every sharpness check, so a
formula that fails to be integral raises instead of rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class ParameterError(ValueError):
    """Parameters violating a parity, range or integrality precondition."""


def _require_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ParameterError(f"{what} = {x} is not an integer")
    return x.numerator


def _check_block_args(k: int, t: int, q: int) -> None:
    if k < 1:
        raise ParameterError("k must be positive")
    if not 0 <= t < k:
        raise ParameterError(f"need 0 <= t < k, got t={t}, k={k}")
    if (k - t) % 2:
        raise ParameterError(f"t={t} and k={k} differ in parity")
    if q < 0:
        raise ParameterError("q must be non-negative")


def residue_s(k: int, t: int, q: int) -> int:
    """The unique s in [0, t+1] with s = q + (k-t-2)/2 (mod t+2)."""
    _check_block_args(k, t, q)
    return (q + (k - t - 2) // 2) % (t + 2)


def block_formula(k: int, t: int, q: int) -> int:
    """The quadratic term of the block threshold, before the max with k."""
    s = residue_s(k, t, q)
    val = (
        Fraction(k * k, 2 * (t + 2))
        + Fraction((q - s) * k, t + 2)
        - Fraction(t, 2)
        + s
    )
    return _require_int(val, f"block formula({k},{t},{q})")


def block_threshold(k: int, t: int, q: int) -> int:
    """Smallest n forcing a k-block of weight at most t in absolute value.

    Every f: [n] -> {-1, 1} with |f([n])| <= q and n >= the returned value
    has such a block; one below it there are counterexamples whenever the
    value exceeds k.
    """
    return max(k, block_formula(k, t, q))


def gap_residue_s(k: int) -> int:
    if k < 2 or k % 2:
        raise ParameterError(f"k must be even and positive, got {k}")
    return ((k - 2) // 2) % 2


def gap_formula(d: int, k: int) -> int:
    if d < 2:
        raise ParameterError(f"d must be at least 2, got {d}")
    s = gap_residue_s(k)
    val = Fraction((d + 1) * (k * k - 2 * s * k + 4 * s - 4), 8) + 1
    return _require_int(val, f"gap formula({d},{k})")


def gap_threshold(d: int, k: int) -> int:
    """Smallest n forcing a zero-sum (d, k)-block under the weight bound.

    For k in {2, 4} the bound is ``max(k, formula)``; sharpness (and the
    extremal families) only exist for k >= 6.
    """
    val = gap_formula(d, k)
    return max(k, val) if k < 6 else val


def gap_weight_bound(d: int, n: int) -> Fraction:
    """The admissible total weight (d-1)n/(d+1) for length-n sequences."""
    return Fraction((d - 1) * n, d + 1)


@dataclass(frozen=True)
class BlockParams:
    k: int
    t: int
    q: int
    s_residue: int
    n_threshold: int

    @classmethod
    def of(cls, k: int, t: int, q: int) -> "BlockParams":
        return cls(k, t, q, residue_s(k, t, q), block_threshold(k, t, q))


@dataclass(frozen=True)
class GapParams:
    d: int
    k: int
    s_residue: int
    n_threshold: int

    @classmethod
    def of(cls, d: int, k: int) -> "GapParams":
        return cls(d, k, gap_residue_s(k), gap_threshold(d, k))


@dataclass(frozen=True)
class LevelSet:
    """L(r, s, m): every weight an m-term {-r, s} sequence can have."""

    r: int
    s_val: int
    m: int
    values: tuple[int, ...]

    def __contains__(self, p) -> bool:
        return p in self.values

    def __len__(self) -> int:
        return len(self.values)


def _check_rsm(r: int, s_val: int, m: int) -> None:
    if r < 1 or s_val < 1 or m < 1:
        raise ParameterError("r, s_val and m must be positive")


def level_set(r: int, s_val: int, m: int) -> LevelSet:
    _check_rsm(r, s_val, m)
    vals = tuple((r + s_val) * y - r * m for y in range(m + 1))
    return LevelSet(r, s_val, m, vals)


def _bracket(q: Rational, r: int, s_val: int, m: int) -> tuple[int, int]:
    _check_rsm(r, s_val, m)
    q = Fraction(q)
    if not -r * m <= q <= s_val * m:
        raise ParameterError(f"q={q} outside [{-r * m}, {s_val * m}]")
    step = r + s_val
    y = (q + r * m) / step
    lo = math.floor(y) * step - r * m
    hi = math.ceil(y) * step - r * m
    return lo, hi


def lambda_floor(q: Rational, r: int, s_val: int, m: int) -> int:
    """Largest element of L(r, s_val, m) not exceeding q."""
    return _bracket(q, r, s_val, m)[0]


def lambda_ceil(q: Rational, r: int, s_val: int, m: int) -> int:
    """Smallest element of L(r, s_val, m) not below q."""
    return _bracket(q, r, s_val, m)[1]


def zero_in_level_set(r: int, s_val: int, m: int) -> bool:
    _check_rsm(r, s_val, m)
    return m % ((r + s_val) // math.gcd(r, s_val)) == 0
