"""Searches for bounded-weight blocks, zero-sum gap blocks and zero-sum APs.

Every search returns a :class:`~zeroseq.seq.BlockWitness` or ``None``.
Contiguous and AP searches return the lexicographically least witness.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .seq import (
    ARITHMETIC,
    CONTIGUOUS,
    GAP,
    BlockWitness,
    SignedSeq,
    weight_of,
    window_weights,
)
from .thresholds import ParameterError


def _require_pm1(f: SignedSeq) -> None:
    if not f.is_pm1:
        raise ParameterError("this search needs a +-1 sequence")


def _check_window(f: SignedSeq, k: int, t: int) -> None:
    _require_pm1(f)
    if not abs(t) < k:
        raise ParameterError(f"need |t| < k, got t={t}, k={k}")
    if k > f.n:
        raise ParameterError(f"k={k} exceeds sequence length {f.n}")
    if (k - t) % 2:
        raise ParameterError(f"t={t} and k={k} differ in parity")


def _window_witness(f: SignedSeq, start: int, k: int) -> BlockWitness:
    w = int(f.prefix[start + k - 1] - f.prefix[start - 1])
    return BlockWitness(tuple(range(start, start + k)), w, CONTIGUOUS, 1)


def scan_exact_block(f: SignedSeq, k: int, t: int) -> Optional[BlockWitness]:
    """Leftmost k-block of weight exactly t, or None."""
    _check_window(f, k, t)
    hits = np.flatnonzero(window_weights(f, k) == t)
    if hits.size == 0:
        return None
    return _window_witness(f, int(hits[0]) + 1, k)


def scan_bounded_block(f: SignedSeq, k: int, t: int) -> Optional[BlockWitness]:
    """Leftmost k-block B with |f(B)| <= t, or None."""
    if t < 0:
        raise ParameterError("t must be non-negative")
    _check_window(f, k, t)
    hits = np.flatnonzero(np.abs(window_weights(f, k)) <= t)
    if hits.size == 0:
        return None
    return _window_witness(f, int(hits[0]) + 1, k)


# -- (d, k)-blocks ----------------------------------------------------------


def _gap_ok(idx: Sequence[int], d: int) -> bool:
    return all(0 < b - a <= d for a, b in zip(idx, idx[1:]))


def is_gap_block(f: SignedSeq, idx: Sequence[int], d: int, k: int) -> bool:
    return (
        len(idx) == k
        and len(idx) > 0
        and idx[0] >= 1
        and idx[-1] <= f.n
        and _gap_ok(idx, d)
    )


def _gap_witness(f: SignedSeq, idx: Sequence[int], d: int) -> BlockWitness:
    return BlockWitness(tuple(idx), weight_of(f, idx), GAP, d)


def _construct_zs_gap_block(f: SignedSeq, d: int, k: int) -> Optional[list[int]]:
    """The residue-class deletion argument, or None if it does not apply."""
    vals = f.values if f.total >= 0 else -f.values
    n = f.n
    excess = int(vals.sum())
    plus = vals > 0
    positions = np.arange(1, n + 1)
    # residue class i is {x : x = i mod d}, i = 1..d; ties go to the smallest i
    counts = [int(plus[(positions % d) == (i % d)].sum()) for i in range(1, d + 1)]
    keep_class = 1 + counts.index(min(counts))
    in_class = (positions % d) == (keep_class % d)
    removable = np.flatnonzero(plus & ~in_class)
    if removable.size < excess:
        return None
    keep = np.ones(n, dtype=bool)
    keep[removable[:excess]] = False
    survivors = positions[keep]
    if survivors.size < k:
        return None
    sub = vals[keep]
    prefix = np.concatenate(([0], np.cumsum(sub)))
    hits = np.flatnonzero(prefix[k:] - prefix[:-k] == 0)
    if hits.size == 0:
        return None
    idx = [int(x) for x in survivors[hits[0]: hits[0] + k]]
    return idx if _gap_ok(idx, d) else None


def _chain_table(vals: np.ndarray, d: int, k: int) -> list[list[int]]:
    """reach[j][c]: bitmask of weights (offset k) of d-chains of c terms starting at j.

    Positions are 0-based here.
    """
    n = len(vals)
    reach = [[0] * (k + 1) for _ in range(n)]
    full = (1 << (2 * k + 1)) - 1
    for j in range(n - 1, -1, -1):
        up = vals[j] > 0
        row = reach[j]
        row[1] = 1 << (k + (1 if up else -1))
        for c in range(2, k + 1):
            acc = 0
            for j2 in range(j + 1, min(n, j + d + 1)):
                acc |= reach[j2][c - 1]
            row[c] = ((acc << 1) if up else (acc >> 1)) & full
    return reach


def least_zs_gap_block(f: SignedSeq, d: int, k: int) -> Optional[BlockWitness]:
    """Lexicographically least zero-sum (d, k)-block, by a suffix chain table."""
    _require_pm1(f)
    if k < 1 or k > f.n:
        return None
    vals = f.values
    reach = _chain_table(vals, d, k)
    n = f.n
    start = next((j for j in range(n) if reach[j][k] >> k & 1), None)
    if start is None:
        return None
    idx = [start]
    need = -int(vals[start])
    for c in range(k - 1, 0, -1):
        prev = idx[-1]
        nxt = next(
            j2
            for j2 in range(prev + 1, min(n, prev + d + 1))
            if reach[j2][c] >> (need + k) & 1
        )
        idx.append(nxt)
        need -= int(vals[nxt])
    return _gap_witness(f, [i + 1 for i in idx], d)


def find_zs_gap_block(f: SignedSeq, d: int, k: int) -> Optional[BlockWitness]:
    """A zero-sum (d, k)-block of f, or None if there is none.

    First tries the constructive argument: orient f so it is +1-heavy,
    protect the residue class mod d holding the fewest +1's, delete the
    earliest surplus +1's outside it and take the first zero-sum k-block of
    what survives.  Protected positions keep every survivor gap at most d.
    When that argument does not apply, an exact chain search decides.
    """
    _require_pm1(f)
    if d < 1:
        raise ParameterError("d must be positive")
    if k % 2:
        raise ParameterError(f"k must be even, got {k}")
    if k > f.n:
        raise ParameterError(f"k={k} exceeds sequence length {f.n}")
    idx = _construct_zs_gap_block(f, d, k)
    if idx is not None:
        return _gap_witness(f, idx, d)
    return least_zs_gap_block(f, d, k)


def interpolate_gap_block(
    f: SignedSeq, d: int, k: int, S: BlockWitness, T: BlockWitness
) -> BlockWitness:
    """Zero-sum (d, k)-block between a negative block S and a positive block T.

    S is morphed into T by swapping its i-th element for T's i-th element,
    i = 1..k; the first zero-weight intermediate is returned.  Should an
    intermediate stop being a valid (d, k)-block before that, the exact
    chain search is used instead.
    """
    _require_pm1(f)
    if k % 2:
        raise ParameterError("a zero-sum block needs even k")
    for name, B in (("S", S), ("T", T)):
        if not is_gap_block(f, B.indices, d, k):
            raise ParameterError(f"{name} is not a ({d},{k})-block of f")
    ws, wt = weight_of(f, S.indices), weight_of(f, T.indices)
    if ws > 0 > wt:
        S, T, ws, wt = T, S, wt, ws
    if not ws < 0 < wt:
        raise ParameterError(f"weights {ws}, {wt} do not straddle 0")
    src, dst = list(S.indices), list(T.indices)
    for i in range(1, k + 1):
        cand = sorted(set(dst[:i]) | set(src[i:]))
        if not is_gap_block(f, cand, d, k):
            break
        if weight_of(f, cand) == 0:
            return _gap_witness(f, cand, d)
    found = least_zs_gap_block(f, d, k)
    assert found is not None, "straddling (d,k)-blocks always bracket a zero"
    return found


# -- arithmetic progressions and streaming ----------------------------------


def find_zs_ap(f: SignedSeq, k: int) -> Optional[BlockWitness]:
    """Lexicographically least zero-sum k-term AP (leftmost start, then step)."""
    _require_pm1(f)
    n = f.n
    if not 1 <= k <= n:
        raise ParameterError(f"k={k} outside [1, {n}]")
    if k == 1:
        return None
    vals = f.values
    best: Optional[tuple[int, int]] = None
    for diff in range(1, (n - 1) // (k - 1) + 1):
        # running[x] = f(x) + f(x - diff) + ... along the residue class of x
        running = vals.copy()
        for x in range(diff, n):
            running[x] += running[x - diff]
        span = (k - 1) * diff
        starts = np.arange(0, n - span)
        ends = starts + span
        sums = running[ends] - np.where(starts >= diff, running[starts - diff], 0)
        hits = np.flatnonzero(sums == 0)
        if hits.size:
            a = int(hits[0]) + 1
            if best is None or a < best[0]:
                best = (a, diff)
    if best is None:
        return None
    a, diff = best
    return BlockWitness(tuple(range(a, a + k * diff, diff)), 0, ARITHMETIC, diff)


def zs_block_starts(values: np.ndarray, k: int) -> np.ndarray:
    """1-based starts of all zero-sum k-windows of a +-1 array."""
    prefix = np.concatenate(([0], np.cumsum(values, dtype=np.int64)))
    if k > values.size:
        return np.empty(0, dtype=np.int64)
    return np.flatnonzero(prefix[k:] - prefix[:-k] == 0) + 1


def stream_zs_blocks(f: SignedSeq, k: int, window_limit: int) -> list[BlockWitness]:
    """All zero-sum k-blocks starting at or before ``window_limit``."""
    _require_pm1(f)
    if k < 2 or k % 2:
        raise ParameterError(f"k must be even and positive, got {k}")
    starts = zs_block_starts(f.values, k)
    return [
        BlockWitness(tuple(range(a, a + k)), 0, CONTIGUOUS, 1)
        for a in starts[starts <= window_limit].tolist()
    ]
