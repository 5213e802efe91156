"""
Balanced transversals of a layered grid
=======================================

Take m layers of n cells valued -r or s.  Pick one cell per layer to form
a path; the n paths should partition the grid.  The paths can always be
chosen so each weight sits at one of the two attainable levels nearest the
average.
"""

import numpy as np

from zeroseq import LayeredInstance, decompose, decompose_interval, level_set, parse_seq, zs_decompose

rng = np.random.default_rng(1)

# %%
# A random 4 x 6 grid over {-2, 3}.
inst = LayeredInstance(rng.choice([-2, 3], (6, 4)), 2, 3)
print(inst.cells)
print("attainable path weights", level_set(2, 3, 6).values)
print("average", inst.q, "band", inst.band())
dec = decompose(inst)
for p, w in zip(dec.paths, dec.weights):
    print("  path", p, "weight", w)

# %%
# With total zero and a level set containing zero, every path is zero-sum.
cells = np.array([[-2, 3, -2], [3, -2, -2], [-2, -2, 3], [-2, 3, -2], [3, -2, 3]])
z = LayeredInstance(cells, 2, 3)
print("total", z.total, "->", zs_decompose(z).weights)

# %%
# Cutting a sequence into m intervals of length n gives n disjoint
# subsequences with gaps at most 2n-1 and near-equal weights.
f = parse_seq("+-++--+-+--++-+-")
for b in decompose_interval(f, 4, 4):
    print(b.indices, "weight", b.weight)
