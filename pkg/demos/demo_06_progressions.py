"""
Progressions beat blocks
========================

For k = 18 the balanced sequence of length 80 made of runs of eight -1 and
ten +1 has no zero-sum 18-block, yet an 18-term arithmetic progression with
step 3 sums to zero.
"""

from zeroseq import find_zs_ap, scan_bounded_block
from zeroseq.oracle import verify_ap_proposition, zs_block_free_pattern

f = zs_block_free_pattern(18)
print(f.to_text())
print("length", f.n, "total", f.total)
print("zero-sum 18-block:", scan_bounded_block(f, 18, 0))
ap = find_zs_ap(f, 18)
print("zero-sum AP:", ap.indices, "step", ap.step)
print(verify_ap_proposition(18).to_json())
