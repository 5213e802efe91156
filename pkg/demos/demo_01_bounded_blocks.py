"""
Bounded-weight blocks in +-1 sequences
======================================

A k-block is a window of k consecutive positions.  Once a +-1 sequence is
long enough and its total is small, some k-block must have small weight.
This script walks through the threshold formula and the two scanners.
"""

import numpy as np

from zeroseq import block_threshold, parse_seq, residue_s, scan_bounded_block, scan_exact_block

# %%
# The threshold depends on (k, t, q) through a residue s.  For a zero-sum
# 6-block in a balanced sequence, nine terms suffice.
for k, t, q in [(6, 0, 0), (6, 0, 1), (7, 1, 4), (8, 0, 2)]:
    print(f"k={k} t={t} q={q}: s={residue_s(k, t, q)}  N={block_threshold(k, t, q)}")

# %%
# One term short of the threshold, a balanced sequence can dodge every
# zero-sum 6-block.
f = parse_seq("--++++--")
print(f.to_text(), "->", scan_bounded_block(f, 6, 0))

# %%
# Reaching the threshold of ten terms with total at most 1 forces a
# zero-sum 6-block; a total of 2 does not.
for tail in ("+-", "-+", "++"):
    g = parse_seq(f.to_text() + tail)
    print(g.to_text(), "total", g.total, "->", scan_bounded_block(g, 6, 0))

# %%
# Window weights change by 0 or 2 as the window slides, so every level
# between the lightest and heaviest window is hit.  scan_exact_block finds
# the leftmost one.
rng = np.random.default_rng(0)
h = parse_seq("".join(rng.choice(["+", "-"], 30)))
weights = [int(h.prefix[i + 8] - h.prefix[i]) for i in range(h.n - 7)]
print(h.to_text())
print("8-window weights:", weights)
for t in range(max(min(weights), -6), min(max(weights), 6) + 1, 2):
    print(f"  weight {t:+d}: starts at {scan_exact_block(h, 8, t).indices[0]}")
