"""Signed sequences over {-r, s}, window weights and block witnesses.

Positions are 1-based throughout; the 0-based numpy storage is an
implementation detail of :class:`SignedSeq`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

CONTIGUOUS = "contiguous"
GAP = "gap"
ARITHMETIC = "arithmetic"


class SequenceError(ValueError):
    """Malformed sequence text or an out-of-range position."""


@dataclass(frozen=True, eq=False)
class SignedSeq:
    """A finite sequence with every entry equal to ``-r`` or ``s_val``.

    ``prefix[i]`` is the weight of positions ``1..i`` so any window weight is
    a difference of two prefix entries.
    """

    values: np.ndarray
    r: int = 1
    s_val: int = 1
    prefix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64).copy()
        if vals.ndim != 1 or vals.size == 0:
            raise SequenceError("sequence must be a non-empty 1-d list")
        if self.r < 1 or self.s_val < 1:
            raise SequenceError("r and s_val must be positive")
        bad = (vals != -self.r) & (vals != self.s_val)
        if bad.any():
            pos = int(np.flatnonzero(bad)[0]) + 1
            raise SequenceError(
                f"value {int(vals[pos - 1])} at position {pos} is not in "
                f"{{-{self.r}, {self.s_val}}}"
            )
        vals.setflags(write=False)
        prefix = np.zeros(vals.size + 1, dtype=np.int64)
        np.cumsum(vals, out=prefix[1:])
        prefix.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "SignedSeq":
        return cls(np.fromiter(signs, dtype=np.int64))

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, pos: int) -> int:
        """Value at 1-based position ``pos``."""
        if not 1 <= pos <= len(self):
            raise SequenceError(f"position {pos} outside [1, {len(self)}]")
        return int(self.values[pos - 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedSeq):
            return NotImplemented
        return (
            self.r == other.r
            and self.s_val == other.s_val
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.r, self.s_val, self.values.tobytes()))

    def __neg__(self) -> "SignedSeq":
        if self.r != self.s_val:
            raise SequenceError("negation only defined when r == s_val")
        return SignedSeq(-self.values, self.r, self.s_val)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return int(self.prefix[-1])

    @property
    def is_pm1(self) -> bool:
        return self.r == 1 and self.s_val == 1

    def to_text(self) -> str:
        if self.is_pm1:
            return "".join("+" if v > 0 else "-" for v in self.values)
        return " ".join(str(int(v)) for v in self.values)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class BlockWitness:
    """An index set found in a sequence together with its weight.

    ``kind`` is one of ``contiguous``, ``gap`` (``step`` = gap bound d) or
    ``arithmetic`` (``step`` = common difference).
    """

    indices: tuple[int, ...]
    weight: int
    kind: str = CONTIGUOUS
    step: int = 1

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        idx = self.indices
        if not idx:
            raise ValueError("empty witness")
        diffs = [b - a for a, b in zip(idx, idx[1:])]
        if any(df <= 0 for df in diffs) or idx[0] < 1:
            raise ValueError(f"indices not strictly increasing 1-based: {idx}")
        if self.kind == CONTIGUOUS:
            if any(df != 1 for df in diffs):
                raise ValueError("contiguous witness with a gap")
        elif self.kind == GAP:
            if self.step < 1 or any(df > self.step for df in diffs):
                raise ValueError(f"gap exceeds {self.step}")
        elif self.kind == ARITHMETIC:
            if self.step < 1 or any(df != self.step for df in diffs):
                raise ValueError(f"not an arithmetic progression of step {self.step}")
        else:
            raise ValueError(f"unknown witness kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def start(self) -> int:
        return self.indices[0]

    def check(self, f: SignedSeq) -> bool:
        """True iff every index lies in f and the stored weight recomputes."""
        return self.indices[-1] <= f.n and weight_of(f, self.indices) == self.weight

    def to_json(self) -> dict:
        return {"indices": list(self.indices), "weight": self.weight}


def _strip_comments(text: str) -> str:
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    return "\n".join(lines)


def parse_seq(text: str, r: int = 1, s_val: int = 1) -> SignedSeq:
    """Parse ``+``/``-`` symbols or a whitespace-separated integer list.

    ``+`` maps to ``s_val`` and ``-`` to ``-r``.  Lines starting with ``#``
    are comments.
    """
    body = _strip_comments(text)
    compact = "".join(body.split())
    if not compact:
        raise SequenceError("empty sequence")
    if set(compact) <= {"+", "-"}:
        vals = [s_val if c == "+" else -r for c in compact]
    else:
        vals = []
        for tok in body.split():
            try:
                v = int(tok)
            except ValueError:
                raise SequenceError(f"bad token {tok!r}") from None
            if v not in (-r, s_val):
                raise SequenceError(f"value {v} not in {{-{r}, {s_val}}}")
            vals.append(v)
    return SignedSeq(np.array(vals, dtype=np.int64), r, s_val)


def window_weight(f: SignedSeq, i: int, k: int) -> int:
    """Weight of the k-block ``{i, ..., i+k-1}`` in O(1)."""
    if k < 1 or i < 1 or i + k - 1 > f.n:
        raise SequenceError(f"window ({i}, {k}) outside [1, {f.n}]")
    return int(f.prefix[i + k - 1] - f.prefix[i - 1])


def window_weights(f: SignedSeq, k: int) -> np.ndarray:
    """All k-window weights; entry ``j`` is the window starting at ``j+1``."""
    if not 1 <= k <= f.n:
        raise SequenceError(f"window length {k} outside [1, {f.n}]")
    return f.prefix[k:] - f.prefix[:-k]


def weight_of(f: SignedSeq, indices: Sequence[int]) -> int:
    idx = np.asarray(list(indices), dtype=np.int64)
    if idx.size and (idx.min() < 1 or idx.max() > f.n):
        raise SequenceError(f"index outside [1, {f.n}]")
    return int(f.values[idx - 1].sum())
