"""
Zero-sum gap blocks
===================

A (d, k)-block picks k increasing positions whose consecutive gaps are at
most d.  Allowing gaps buys a much weaker balance requirement: the total may
be as large as (d-1)n/(d+1).
"""

import numpy as np

from zeroseq import find_zs_gap_block, gap_threshold, interpolate_gap_block, parse_seq
from zeroseq.search import least_zs_gap_block
from zeroseq.seq import GAP, BlockWitness, SignedSeq

# %%
for d, k in [(2, 6), (2, 8), (3, 6), (3, 8)]:
    print(f"d={d} k={k}: N={gap_threshold(d, k)}")

# %%
# A lopsided sequence of length 13 still has a zero-sum (2, 6)-block.
rng = np.random.default_rng(4)
while True:
    vals = rng.choice([-1, 1], 13, p=[0.35, 0.65])
    if 0 < abs(vals.sum()) <= 13 // 3:
        break
f = SignedSeq(vals)
w = find_zs_gap_block(f, 2, 6)
print(f.to_text(), "total", f.total)
print("witness", w.indices, "weight", w.weight)
print("least  ", least_zs_gap_block(f, 2, 6).indices)

# %%
# Between a negative and a positive block, swapping one index at a time
# passes through zero.
g = parse_seq("--++++--")
S = BlockWitness((1, 2), -2, GAP, 2)
T = BlockWitness((3, 4), 2, GAP, 2)
print(interpolate_gap_block(g, 2, 2, S, T))
