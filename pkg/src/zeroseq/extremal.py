"""Extremal sequences one step below the block and gap thresholds.

Both families are generated from their block layouts and recognised by a
direct rule check; the two routes share only the layout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .seq import SignedSeq
from .thresholds import (
    ParameterError,
    block_formula,
    gap_formula,
    gap_residue_s,
    residue_s,
)


@dataclass(frozen=True)
class BlockFamilySpec:
    """Layout of the extremal family for k-blocks of weight at most t.

    n = m*k + r, and ``R[i]`` is the run of the first r positions of the
    i-th length-k period (i = 0..m, so there are m+1 runs).
    """

    k: int
    t: int
    q: int
    s_residue: int
    n: int
    m: int
    r: int

    @classmethod
    def of(cls, k: int, t: int, q: int) -> "BlockFamilySpec":
        s = residue_s(k, t, q)
        formula = block_formula(k, t, q)
        if formula <= k:
            raise ParameterError(
                f"no extremal family for ({k},{t},{q}): threshold {formula} <= k"
            )
        n = formula - 1
        m, r = divmod(n, k)
        assert r == (k - t) // 2 + s - 1
        return cls(k, t, q, s, n, m, r)

    @property
    def runs(self) -> list[range]:
        if self.r == 0:
            return []
        return [range(i * self.k + 1, i * self.k + self.r + 1) for i in range(self.m + 1)]


@dataclass(frozen=True)
class GapFamilySpec:
    """Layout of the extremal family for zero-sum (d, k)-blocks.

    n = m*b + r; ``R[i]`` has length r and ``T[i]`` length b - r = d*(k/2 + 1 - s).
    """

    d: int
    k: int
    s_residue: int
    n: int
    m: int
    b: int
    r: int

    @classmethod
    def of(cls, d: int, k: int) -> "GapFamilySpec":
        if k < 6 or k % 2:
            raise ParameterError(f"gap families need even k >= 6, got {k}")
        if d < 2:
            raise ParameterError(f"d must be at least 2, got {d}")
        s = gap_residue_s(k)
        n = gap_formula(d, k) - 1
        m = (k - 2 * s - 2) // 4
        b = (d + 1) * k // 2 + d - 1
        r = k // 2 - 1 + d * s
        assert n == m * b + r
        return cls(d, k, s, n, m, b, r)

    @property
    def runs(self) -> list[range]:
        return [range(i * self.b + 1, i * self.b + self.r + 1) for i in range(self.m + 1)]

    @property
    def plateaus(self) -> list[range]:
        return [range(i * self.b + self.r + 1, (i + 1) * self.b + 1) for i in range(self.m)]


def _ordered(positives: Sequence[np.ndarray]) -> list[SignedSeq]:
    seqs = sorted((SignedSeq(v) for v in positives), key=SignedSeq.to_text)
    out: list[SignedSeq] = []
    seen: set[str] = set()
    for f in seqs:
        for g in (f, -f):
            key = g.to_text()
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


# -- k-blocks -----------------------------------------------------------------


def _chained_choices(spec: BlockFamilySpec) -> Iterator[list[tuple[int, ...]]]:
    """All choices of s-subsets S_i of R_i with a^{i+1}_l <= a^i_l + k."""
    runs, s, k = spec.runs, spec.s_residue, spec.k
    choice: list[tuple[int, ...]] = []

    def extend(i: int) -> Iterator[list[tuple[int, ...]]]:
        if i == len(runs):
            yield list(choice)
            return
        for sub in itertools.combinations(runs[i], s):
            if choice and any(a > b + k for a, b in zip(sub, choice[-1])):
                continue
            choice.append(sub)
            yield from extend(i + 1)
            choice.pop()

    yield from extend(0)


def enumerate_block_family(k: int, t: int, q: int) -> list[SignedSeq]:
    spec = BlockFamilySpec.of(k, t, q)
    base = np.ones(spec.n, dtype=np.int64)
    for run in spec.runs:
        base[run.start - 1: run.stop - 1] = -1
    if spec.r == 0 or spec.s_residue == 0:
        return _ordered([base])
    positives = []
    for choice in _chained_choices(spec):
        v = base.copy()
        for sub in choice:
            v[[a - 1 for a in sub]] = 1
        positives.append(v)
    return _ordered(positives)


def _block_rules_ok(vals: np.ndarray, spec: BlockFamilySpec) -> bool:
    in_run = np.zeros(spec.n, dtype=bool)
    for run in spec.runs:
        in_run[run.start - 1: run.stop - 1] = True
    if (vals[~in_run] != 1).any():
        return False
    prev = None
    for run in spec.runs:
        ones = [x for x in run if vals[x - 1] == 1]
        if len(ones) != spec.s_residue:
            return False
        if prev is not None and any(a > b + spec.k for a, b in zip(ones, prev)):
            return False
        prev = ones
    return True


def is_block_family_member(f: SignedSeq, k: int, t: int, q: int) -> bool:
    spec = BlockFamilySpec.of(k, t, q)
    if f.n != spec.n:
        raise ParameterError(f"length {f.n} differs from family length {spec.n}")
    if not f.is_pm1:
        return False
    return _block_rules_ok(f.values, spec) or _block_rules_ok(-f.values, spec)


# -- (d, k)-blocks ------------------------------------------------------------


def _is_run(positions: Sequence[int]) -> bool:
    return all(b - a == 1 for a, b in zip(positions, positions[1:]))


def _plus_extension(vals: np.ndarray, run: range, step: int) -> int:
    """Length of the +1 run inside ``run`` touching the adjacent plateau.

    step = -1 scans ``run`` from its right end (run precedes the plateau),
    step = +1 from its left end.
    """
    positions = reversed(run) if step < 0 else iter(run)
    count = 0
    for x in positions:
        if vals[x - 1] != 1:
            break
        count += 1
    return count


def _pair_ok(vals: np.ndarray, spec: GapFamilySpec, i: int) -> bool:
    """Pairing rules for runs R_i, R_{i+1} (0-based i): a broken +1 run must
    reach d across the plateau; an intact run with no right extension must
    meet an intact run after at most k/2 - 1 minus signs."""
    left, right = spec.runs[i], spec.runs[i + 1]
    ones_left = [x for x in left if vals[x - 1] == 1]
    ones_right = [x for x in right if vals[x - 1] == 1]
    ext_left = _plus_extension(vals, left, -1)
    ext_right = _plus_extension(vals, right, +1)
    if not _is_run(ones_left):
        return ext_left + ext_right >= spec.d
    if ext_left == 0:
        if not _is_run(ones_right):
            return False
        lo, hi = ones_left[-1], ones_right[0]
        minus_between = int((vals[lo: hi - 1] == -1).sum())
        return minus_between <= spec.k // 2 - 1
    return True


def _gap_rules_ok(vals: np.ndarray, spec: GapFamilySpec) -> bool:
    for plateau in spec.plateaus:
        if (vals[plateau.start - 1: plateau.stop - 1] != 1).any():
            return False
    ones_per_run = spec.d * spec.s_residue
    for run in spec.runs:
        if int((vals[run.start - 1: run.stop - 1] == 1).sum()) != ones_per_run:
            return False
    if spec.s_residue == 0:
        return True
    return all(_pair_ok(vals, spec, i) for i in range(spec.m))


def enumerate_gap_family(d: int, k: int) -> list[SignedSeq]:
    spec = GapFamilySpec.of(d, k)
    base = np.ones(spec.n, dtype=np.int64)
    for run in spec.runs:
        base[run.start - 1: run.stop - 1] = -1
    if spec.s_residue == 0:
        return _ordered([base])

    positives: list[np.ndarray] = []
    vals = base.copy()

    def fill(i: int) -> None:
        if i == len(spec.runs):
            positives.append(vals.copy())
            return
        run = spec.runs[i]
        for ones in itertools.combinations(run, spec.d):
            vals[run.start - 1: run.stop - 1] = -1
            vals[[x - 1 for x in ones]] = 1
            if i > 0 and not _pair_ok(vals, spec, i - 1):
                continue
            fill(i + 1)
        vals[run.start - 1: run.stop - 1] = -1

    fill(0)
    return _ordered(positives)


def is_gap_family_member(f: SignedSeq, d: int, k: int) -> bool:
    spec = GapFamilySpec.of(d, k)
    if f.n != spec.n:
        raise ParameterError(f"length {f.n} differs from family length {spec.n}")
    if not f.is_pm1:
        return False
    return _gap_rules_ok(f.values, spec) or _gap_rules_ok(-f.values, spec)
