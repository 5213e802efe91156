"""Brute-force verifiers for the threshold, sharpness and decomposition claims.

Nothing here calls into the search code paths it is checking: sequences are
enumerated as bit patterns (bit i set means position i+1 is +1), window
weights are updated incrementally from popcounts, and gap blocks are decided
by a dynamic program vectorised across whole batches of sequences.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

import numpy as np

from . import decomp, extremal, search
from .seq import SignedSeq, weight_of
from .thresholds import (
    ParameterError,
    block_formula,
    block_threshold,
    gap_threshold,
    gap_weight_bound,
    lambda_ceil,
    lambda_floor,
    level_set,
    zero_in_level_set,
)

DEFAULT_BUDGET = 1 << 26
CHUNK = 1 << 18


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class VerifyReport:
    name: str
    params: dict
    passed: bool = True
    counts: dict = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def fail(self, why: str, examples: Iterable[str] = ()) -> None:
        self.passed = False
        self.details.setdefault("failures", []).append(why)
        self.counterexamples.extend(examples)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "check": self.name,
            "params": self.params,
            "passed": self.passed,
            "counts": self.counts,
            "counterexamples": sorted(self.counterexamples),
        }
        if self.details:
            out["details"] = self.details
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


# -- bit-level helpers ----------------------------------------------------------


def bits_to_text(x: int, n: int) -> str:
    return "".join("+" if (x >> i) & 1 else "-" for i in range(n))


def text_to_bits(text: str) -> int:
    return sum(1 << i for i, c in enumerate(text) if c == "+")


def sign_matrix(xs: np.ndarray, n: int) -> np.ndarray:
    """(B, n) int8 matrix of +-1 values for a batch of bit patterns."""
    shifts = np.arange(n, dtype=np.uint64)
    bits = (xs.astype(np.uint64)[:, None] >> shifts) & np.uint64(1)
    return (2 * bits.astype(np.int8) - 1).astype(np.int8)


def min_abs_window(xs: np.ndarray, n: int, k: int) -> np.ndarray:
    """Smallest |window weight| over all k-windows, per bit pattern."""
    xs = xs.astype(np.uint64)
    one = np.uint64(1)
    ones = np.bitwise_count(xs & np.uint64((1 << k) - 1)).astype(np.int64)
    best = np.abs(2 * ones - k)
    for j in range(1, n - k + 1):
        ones += ((xs >> np.uint64(j + k - 1)) & one).astype(np.int64)
        ones -= ((xs >> np.uint64(j - 1)) & one).astype(np.int64)
        np.minimum(best, np.abs(2 * ones - k), out=best)
    return best


def totals(xs: np.ndarray, n: int) -> np.ndarray:
    return 2 * np.bitwise_count(xs.astype(np.uint64)).astype(np.int64) - n


def _shards(space: int, chunk: int = CHUNK) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk, space)) for lo in range(0, space, chunk)]


def _run_sharded(fn: Callable, tasks: list[tuple], workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*tasks)))


def _check_budget(n: int, budget: int) -> None:
    if (1 << n) > budget:
        raise BudgetExceeded(f"2^{n} sequences exceeds budget {budget}")


# -- k-blocks ---------------------------------------------------------------------


def _block_shard(lo: int, hi: int, n: int, k: int, t: int, q: int, exact_q: bool):
    xs = np.arange(lo, hi, dtype=np.uint64)
    tot = np.abs(totals(xs, n))
    xs = xs[tot == q] if exact_q else xs[tot <= q]
    bad = xs[min_abs_window(xs, n, k) > t]
    return int(xs.size), bad.tolist()


def no_bounded_block_set(
    n: int, k: int, t: int, q: int, exact_q: bool, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> tuple[int, list[int]]:
    """Bit patterns of length n (|total| <= q, or == q) with every |window| > t."""
    _check_budget(n, budget)
    tasks = [(lo, hi, n, k, t, q, exact_q) for lo, hi in _shards(1 << n)]
    checked, bad = 0, []
    for c, b in _run_sharded(_block_shard, tasks, workers):
        checked += c
        bad.extend(b)
    return checked, sorted(bad)


def verify_block_threshold(
    k: int, t: int, q: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> VerifyReport:
    """Exhaustive check of the k-block threshold and its extremal family.

    At n = N every sequence with |total| <= q must have a k-block of weight
    at most t; at n = N-1 the sequences with |total| = q and no such block
    must be exactly the generated extremal family.
    """
    start = time.perf_counter()
    rep = VerifyReport("block", {"k": k, "t": t, "q": q})
    if block_formula(k, t, q) <= k:
        raise ParameterError(f"threshold for ({k},{t},{q}) is k itself; nothing to verify")
    N = block_threshold(k, t, q)
    _check_budget(N, budget)
    rep.params["n_threshold"] = N

    checked, bad = no_bounded_block_set(N, k, t, q, False, workers, budget)
    rep.counts["checked_at_threshold"] = checked
    if bad:
        rep.fail(f"{len(bad)} sequences of length {N} avoid the bound",
                 (bits_to_text(x, N) for x in bad[:20]))

    _, ext = no_bounded_block_set(N - 1, k, t, q, True, workers, budget)
    found = {bits_to_text(x, N - 1) for x in ext}
    expected = {f.to_text() for f in extremal.enumerate_block_family(k, t, q)}
    rep.counts["extremal_found"] = len(found)
    rep.counts["extremal_expected"] = len(expected)
    if found != expected:
        rep.fail("extremal set differs from generated family",
                 sorted(found ^ expected)[:20])
    rep.elapsed = time.perf_counter() - start
    return rep


# -- (d, k)-blocks ----------------------------------------------------------------


def gap_dp_batch(signs: np.ndarray, d: int, k: int) -> np.ndarray:
    """For each row of a (B, n) +-1 matrix: does a zero-sum (d, k)-block exist?

    State per position j: ends[c-1, w+k, b] is true when some d-bounded chain
    of c terms ending at j has weight w in row b.
    """
    B, n = signs.shape
    found = np.zeros(B, dtype=bool)
    if k > n or k % 2:
        return found
    W = 2 * k + 1
    recent: list[np.ndarray] = []
    for j in range(n):
        plus = signs[:, j] > 0
        minus = ~plus
        cur = np.zeros((k, W, B), dtype=bool)
        cur[0, k + 1] = plus
        cur[0, k - 1] = minus
        if recent and k > 1:
            acc = recent[0][: k - 1].copy()
            for prev in recent[1:]:
                acc |= prev[: k - 1]
            cur[1:, 1:] |= acc[:, :-1] & plus
            cur[1:, :-1] |= acc[:, 1:] & minus
        found |= cur[k - 1, k]
        recent.append(cur)
        if len(recent) > d:
            recent.pop(0)
    return found


def dp_zs_gap_exists(f: SignedSeq, d: int, k: int) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Exact existence of a zero-sum (d, k)-block, with a witness by backtracking."""
    if not f.is_pm1:
        raise ParameterError("dp_zs_gap_exists needs a +-1 sequence")
    n = f.n
    if k < 1 or k > n or k % 2:
        return False, None
    vals = [int(v) for v in f.values]
    W = 2 * k + 1
    # table[j][c][w + k]
    table = [[[False] * W for _ in range(k + 1)] for _ in range(n)]
    for j in range(n):
        table[j][1][k + vals[j]] = True
        for c in range(2, k + 1):
            for jp in range(max(0, j - d), j):
                row = table[jp][c - 1]
                for w in range(W):
                    if row[w]:
                        nw = w + vals[j]
                        if 0 <= nw < W:
                            table[j][c][nw] = True
    end = next((j for j in range(n) if table[j][k][k]), None)
    if end is None:
        return False, None
    idx, j, w = [end], end, k
    for c in range(k, 1, -1):
        w -= vals[j]
        j = next(jp for jp in range(max(0, j - d), j) if table[jp][c - 1][w])
        idx.append(j)
    return True, tuple(sorted(i + 1 for i in idx))


def _gap_shard(lo: int, hi: int, n: int, d: int, k: int, bound: int):
    xs = np.arange(lo, hi, dtype=np.uint64)
    xs = xs[np.abs(totals(xs, n)) <= bound]
    if xs.size == 0:
        return 0, []
    ok = gap_dp_batch(sign_matrix(xs, n), d, k)
    return int(xs.size), xs[~ok].tolist()


def _patterns_with_minus(n: int, minus: int) -> Iterable[np.ndarray]:
    """Bit patterns of length n with exactly ``minus`` cleared bits, in batches."""
    full = (1 << n) - 1
    batch: list[int] = []
    for combo in itertools.combinations(range(n), minus):
        x = full
        for i in combo:
            x &= ~(1 << i)
        batch.append(x)
        if len(batch) >= CHUNK:
            yield np.array(batch, dtype=np.uint64)
            batch = []
    if batch:
        yield np.array(batch, dtype=np.uint64)


def gap_extremal_set(d: int, k: int, n: int, weight: int) -> set[str]:
    """Sequences of length n, |total| = weight, with no zero-sum (d, k)-block.

    Enumerates only the patterns of the right weight, so it reaches lengths
    well past what a full 2^n sweep can.
    """
    if (n - weight) % 2:
        return set()
    minus = (n - weight) // 2
    out: set[str] = set()
    for xs in _patterns_with_minus(n, minus):
        ok = gap_dp_batch(sign_matrix(xs, n), d, k)
        for x in xs[~ok].tolist():
            text = bits_to_text(x, n)
            out.add(text)
            if weight:
                out.add(text.translate(str.maketrans("+-", "-+")))
    return out


def verify_gap_threshold(
    d: int, k: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> VerifyReport:
    """Exhaustive check of the (d, k)-block threshold and its extremal family."""
    start = time.perf_counter()
    rep = VerifyReport("gap", {"d": d, "k": k})
    if k < 6:
        raise ParameterError("sharpness only holds for k >= 6")
    N = gap_threshold(d, k)
    _check_budget(N, budget)
    rep.params["n_threshold"] = N
    bound = math.floor(gap_weight_bound(d, N))
    tasks = [(lo, hi, N, d, k, bound) for lo, hi in _shards(1 << N)]
    checked, bad = 0, []
    for c, b in _run_sharded(_gap_shard, tasks, workers):
        checked += c
        bad.extend(b)
    rep.counts["checked_at_threshold"] = checked
    if bad:
        rep.fail(f"{len(bad)} sequences of length {N} lack a zero-sum block",
                 (bits_to_text(x, N) for x in sorted(bad)[:20]))

    exact = gap_weight_bound(d, N - 1)
    if exact.denominator != 1:
        rep.fail(f"extremal weight {exact} is not an integer")
    else:
        found = gap_extremal_set(d, k, N - 1, int(exact))
        expected = {f.to_text() for f in extremal.enumerate_gap_family(d, k)}
        rep.counts["extremal_found"] = len(found)
        rep.counts["extremal_expected"] = len(expected)
        if found != expected:
            rep.fail("extremal set differs from generated family",
                     sorted(found ^ expected)[:20])
    rep.elapsed = time.perf_counter() - start
    return rep


# -- decompositions ---------------------------------------------------------------


def exhaustive_band_decomposition(inst: decomp.LayeredInstance, lo: int, hi: int) -> bool:
    """Is there any decomposition with every path weight in [lo, hi]?

    Layer 0 is fixed as the identity; later layers are assigned by DFS over
    permutations with interval pruning on the partial weights.
    """
    n, m, r, s = inst.n, inst.m, inst.r, inst.s_val
    cells = inst.cells.tolist()

    def feasible(partial: list[int], layers_left: int) -> bool:
        return all(w - r * layers_left <= hi and w + s * layers_left >= lo for w in partial)

    def go(layer: int, partial: list[int]) -> bool:
        if layer == m:
            return all(lo <= w <= hi for w in partial)
        for perm in itertools.permutations(range(n)):
            nxt = [w + cells[layer][perm[j]] for j, w in enumerate(partial)]
            if feasible(nxt, m - layer - 1) and go(layer + 1, nxt):
                return True
        return False

    return go(1, list(cells[0]))


def check_decomposition(inst: decomp.LayeredInstance, dec: decomp.PathDecomposition) -> list[str]:
    """Contract violations of ``dec`` as human-readable strings (empty if fine)."""
    problems = []
    if not dec.is_partition_of(inst):
        problems.append("paths do not partition the cells one-per-layer")
    recomputed = [
        sum(int(inst.cells[i, p[i]]) for i in range(inst.m)) for p in dec.paths
    ]
    if list(dec.weights) != recomputed:
        problems.append("stored weights do not recompute")
    if sum(recomputed) != inst.total:
        problems.append("path weights do not sum to the total")
    q = Fraction(inst.total, inst.n)
    lo = lambda_floor(q, inst.r, inst.s_val, inst.m)
    hi = lambda_ceil(q, inst.r, inst.s_val, inst.m)
    if not all(lo <= w <= hi for w in recomputed):
        problems.append(f"weights {recomputed} outside [{lo}, {hi}]")
    return problems


def _instance_text(inst: decomp.LayeredInstance) -> str:
    return " ".join(str(int(v)) for v in inst.cells.ravel())


def verify_decomposition(
    n: int,
    m: int,
    r: int = 1,
    s_val: int = 1,
    trials: int = 1000,
    seed: int = 0,
    enumerate_all: bool = False,
    exhaustive: Optional[bool] = None,
) -> VerifyReport:
    """Check the decomposition contract on random (or all) instances.

    Tiny shapes (n <= 4, m <= 5) are also cross-checked by exhaustive search
    for a conforming decomposition.
    """
    start = time.perf_counter()
    rep = VerifyReport("decomp", {"n": n, "m": m, "r": r, "s": s_val, "trials": trials})
    if exhaustive is None:
        exhaustive = n <= 4 and m <= 5 and math.factorial(n) ** (m - 1) <= 20000
    if enumerate_all:
        patterns: Iterable = itertools.product((-r, s_val), repeat=n * m)
        rep.params["trials"] = (2 ** (n * m))
    else:
        rng = random.Random(seed)
        patterns = ([rng.choice((-r, s_val)) for _ in range(n * m)] for _ in range(trials))
    count = tight = zero_sum = exhaustive_checked = 0
    for vals in patterns:
        inst = decomp.LayeredInstance.from_values(vals, n, m, r, s_val)
        dec = decomp.decompose(inst)
        count += 1
        problems = check_decomposition(inst, dec)
        lo, hi = inst.band()
        if lo < hi and lo in dec.weights and hi in dec.weights:
            tight += 1
        if r == s_val == 1:
            band = decomp.pm1_band(inst)
            if not set(dec.weights) <= set(band):
                problems.append(f"weights {dec.weights} outside +-1 band {band}")
        if inst.total == 0 and zero_in_level_set(r, s_val, m):
            zero_sum += 1
            n_s, n_r = decomp.zs_path_counts(r, s_val, m)
            for p in dec.paths:
                col = [int(inst.cells[i, p[i]]) for i in range(m)]
                if col.count(s_val) != n_s or col.count(-r) != n_r:
                    problems.append(f"zero-sum path {p} has wrong value counts")
        if exhaustive:
            exhaustive_checked += 1
            if not exhaustive_band_decomposition(inst, lo, hi):
                problems.append("exhaustive search found no band decomposition")
        if problems:
            rep.fail("; ".join(problems), [_instance_text(inst)])
    rep.counts.update(
        instances=count,
        both_band_edges_attained=tight,
        zero_sum_instances=zero_sum,
        exhaustive_checked=exhaustive_checked,
    )
    rep.elapsed = time.perf_counter() - start
    return rep


# -- arithmetic progressions -------------------------------------------------------


def zs_block_free_pattern(k: int) -> SignedSeq:
    """The unique (up to sign) zero-total sequence of length k^2/4 - 1 with
    no zero-sum k-block, for k = 2 mod 4: runs of k/2 - 1 minus signs
    separated by runs of k/2 + 1 plus signs."""
    n = k * k // 4 - 1
    vals = np.ones(n, dtype=np.int64)
    for start in range(0, n, k):
        vals[start: start + k // 2 - 1] = -1
    return SignedSeq(vals)


def verify_ap_proposition(k: int) -> VerifyReport:
    start = time.perf_counter()
    if k % 4 != 2:
        raise ParameterError(f"k must be 2 mod 4, got {k}")
    half = k // 2
    divisors = [d for d in range(2, half) if half % d == 0]
    if not divisors:
        raise ParameterError(f"k/2 = {half} is prime; the proposition does not apply")
    rep = VerifyReport("ap", {"k": k})
    f = zs_block_free_pattern(k)
    rep.params["n"] = f.n
    if f.n != block_threshold(k, 0, 0) - 1 or f.total != 0:
        rep.fail("pattern has the wrong length or total", [f.to_text()])
    if search.scan_bounded_block(f, k, 0) is not None:
        rep.fail("pattern has a zero-sum k-block", [f.to_text()])
    ap = search.find_zs_ap(f, k)
    if ap is None or weight_of(f, ap.indices) != 0:
        rep.fail("no zero-sum k-term AP found", [f.to_text()])
    else:
        rep.details["found_ap"] = {"start": ap.start, "step": ap.step}
    explicit = {}
    for d in divisors:
        idx = [1 + j * d for j in range(k)]
        w = weight_of(f, idx) if idx[-1] <= f.n else None
        explicit[str(d)] = w
        if w != 0:
            rep.fail(f"explicit AP with step {d} has weight {w}", [f.to_text()])
    rep.details["explicit_ap_weights"] = explicit
    rep.elapsed = time.perf_counter() - start
    return rep


def remark_level_set_suite(r: int, s_val: int, m: int, qs: Iterable[Fraction], scales=(1, 2, 3)) -> list[str]:
    """Check the lambda/Lambda bracket properties at the given targets q."""
    problems = []
    L = level_set(r, s_val, m)
    alt = {-(r + s_val) * x + s_val * m for x in range(m + 1)}
    if set(L.values) != alt or len(L) != m + 1:
        problems.append(f"level set parameterisations disagree for {(r, s_val, m)}")
    if zero_in_level_set(r, s_val, m) != (0 in L):
        problems.append(f"zero membership test wrong for {(r, s_val, m)}")
    for q in qs:
        lo, hi = lambda_floor(q, r, s_val, m), lambda_ceil(q, r, s_val, m)
        if not lo <= q <= hi:
            problems.append(f"bracket fails at q={q}")
        if (lo == hi == q) != (q in L.values):
            problems.append(f"exactness fails at q={q}")
        if hi - lo not in (0, r + s_val):
            problems.append(f"gap {hi - lo} at q={q}")
        for c in scales:
            if c * lo > lambda_floor(q * c, r, s_val, m * c):
                problems.append(f"floor scaling fails at q={q}, n={c}")
            if c * hi < lambda_ceil(q * c, r, s_val, m * c):
                problems.append(f"ceiling scaling fails at q={q}, n={c}")
    return problems
