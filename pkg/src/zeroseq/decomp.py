"""Splitting layered {-r, s} instances into balanced layer-transversals.

A layered instance has m layers of n cells.  Consecutive layers are
completely joined, so a directed m-path is just a choice of one cell per
layer; paths are stored as tuples of 0-based cell indices, one per layer,
and the arc set is never built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .seq import GAP, BlockWitness, SignedSeq
from .thresholds import (
    ParameterError,
    lambda_ceil,
    lambda_floor,
    level_set,
    zero_in_level_set,
)

Path = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LayeredInstance:
    """``cells[i, j]`` is the value of cell j in layer i."""

    cells: np.ndarray
    r: int = 1
    s_val: int = 1

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.size == 0:
            raise ParameterError("cells must be a non-empty m x n array")
        if ((cells != -self.r) & (cells != self.s_val)).any():
            raise ParameterError(f"cell values must lie in {{-{self.r}, {self.s_val}}}")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_values(cls, values: Sequence[int], n: int, m: int, r: int = 1, s_val: int = 1):
        """Build from n*m values listed layer by layer."""
        vals = np.asarray(values, dtype=np.int64)
        if vals.size != n * m:
            raise ParameterError(f"expected {n * m} values, got {vals.size}")
        return cls(vals.reshape(m, n), r, s_val)

    @property
    def m(self) -> int:
        return self.cells.shape[0]

    @property
    def n(self) -> int:
        return self.cells.shape[1]

    @property
    def total(self) -> int:
        return int(self.cells.sum())

    @property
    def q(self) -> Fraction:
        return Fraction(self.total, self.n)

    def band(self) -> tuple[int, int]:
        """(lambda, Lambda) bracketing the average path weight."""
        return (
            lambda_floor(self.q, self.r, self.s_val, self.m),
            lambda_ceil(self.q, self.r, self.s_val, self.m),
        )

    def path_weight(self, path: Sequence[int]) -> int:
        return int(self.cells[np.arange(self.m), list(path)].sum())


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[Path, ...]
    weights: tuple[int, ...]

    def is_partition_of(self, inst: LayeredInstance) -> bool:
        if len(self.paths) != inst.n:
            return False
        if any(len(p) != inst.m for p in self.paths):
            return False
        return all(
            sorted(p[i] for p in self.paths) == list(range(inst.n)) for i in range(inst.m)
        )


def path_interpolate(inst: LayeredInstance, P: Sequence[int], Q: Sequence[int], p: int) -> Path:
    """A path of weight exactly p obtained by morphing P into Q layer by layer.

    Each step swaps a single cell, changing the weight by 0 or r + s, so every
    level between the two endpoint weights is hit.
    """
    if p not in level_set(inst.r, inst.s_val, inst.m):
        raise ParameterError(f"{p} is not an attainable path weight")
    wp, wq = inst.path_weight(P), inst.path_weight(Q)
    if not min(wp, wq) <= p <= max(wp, wq):
        raise ParameterError(f"{p} not between path weights {wp} and {wq}")
    cur = list(P)
    w = wp
    for i in range(inst.m):
        if w == p:
            break
        w += int(inst.cells[i, Q[i]] - inst.cells[i, cur[i]])
        cur[i] = Q[i]
    assert w == p
    return tuple(cur)


def decompose(inst: LayeredInstance) -> PathDecomposition:
    """Split ``inst`` into n transversals with weights in [lambda, Lambda].

    Starting from the identity transversals, repeatedly take the heaviest
    path P and lightest path Q, morph Q into P until the weight reaches the
    band edge nearer to the current average (lambda on ties), set that path
    aside and return the unused cells of P and Q as a new path.  The band of
    the remaining instance never changes, so the loop ends with every path in
    it.
    """
    m, step, rm = inst.m, inst.r + inst.s_val, inst.r * inst.m
    cells = inst.cells.tolist()

    def weight(path: Path) -> int:
        return sum(cells[i][c] for i, c in enumerate(path))

    live: list[Path] = [tuple([j] * m) for j in range(inst.n)]
    weights = [weight(p) for p in live]
    done: list[Path] = []
    while True:
        # band of the live average, in integers: q = total / count
        total, count = sum(weights), len(live)
        y_floor = (total + rm * count) // (step * count)
        lo = y_floor * step - rm
        hi = lo if lo * count == total else lo + step
        if all(lo <= w <= hi for w in weights):
            done.extend(live)
            break
        ip = max(range(count), key=lambda i: (weights[i], -i))
        iq = min(range(count), key=lambda i: (weights[i], i))
        P, Q = live[ip], live[iq]
        target = lo if total - lo * count <= hi * count - total else hi
        R = path_interpolate(inst, Q, P, target)
        rest = tuple(P[i] if R[i] == Q[i] else Q[i] for i in range(m))
        keep = [i for i in range(count) if i not in (ip, iq)]
        live = [live[i] for i in keep] + [rest]
        weights = [weights[i] for i in keep] + [weight(rest)]
        done.append(R)
    return PathDecomposition(tuple(done), tuple(weight(p) for p in done))


def zs_path_counts(r: int, s_val: int, m: int) -> tuple[int, int]:
    """(# cells valued s, # cells valued -r) on any zero-sum m-path."""
    if not zero_in_level_set(r, s_val, m):
        raise ParameterError(f"no zero-sum path: (r+s)/gcd(r,s) does not divide {m}")
    g = math.gcd(r, s_val)
    unit = g * m // (r + s_val)
    return unit * r // g, unit * s_val // g


def zs_decompose(inst: LayeredInstance) -> PathDecomposition:
    """Zero-sum decomposition; needs total 0 and 0 in L(r, s, m)."""
    if not zero_in_level_set(inst.r, inst.s_val, inst.m):
        raise ParameterError(
            f"(r+s)/gcd(r,s) = {(inst.r + inst.s_val) // math.gcd(inst.r, inst.s_val)}"
            f" does not divide m = {inst.m}"
        )
    if inst.total != 0:
        raise ParameterError(f"total weight {inst.total} is not zero")
    out = decompose(inst)
    assert all(w == 0 for w in out.weights)
    return out


def pm1_band(inst: LayeredInstance) -> tuple[int, int]:
    """The two possible path weights for a +-1 instance, lower first."""
    if inst.r != 1 or inst.s_val != 1:
        raise ParameterError("pm1_band needs r = s = 1")
    k = math.ceil(inst.q)
    if (inst.m - k) % 2 == 0:
        return k - 2, k
    return k - 1, k + 1


def interval_instance(f: SignedSeq, n: int, m: int) -> LayeredInstance:
    """Layer i is the interval I_i = {(i-1)n+1, ..., in}."""
    if n < 1 or m < 1 or f.n != n * m:
        raise ParameterError(f"length {f.n} is not n*m = {n}*{m}")
    return LayeredInstance(f.values.reshape(m, n), f.r, f.s_val)


def decompose_interval(f: SignedSeq, n: int, m: int) -> list[BlockWitness]:
    """n disjoint (2n-1)-bounded gap sequences, one element per interval I_i."""
    inst = interval_instance(f, n, m)
    dec = decompose(inst)
    out = []
    for path, w in zip(dec.paths, dec.weights):
        idx = tuple(i * n + c + 1 for i, c in enumerate(path))
        out.append(BlockWitness(idx, w, GAP, 2 * n - 1))
    return out
