"""
Extremal sequences
==================

The thresholds are sharp.  The sequences of length N-1 that attain the
largest allowed total and still avoid every valid block form small,
explicit families.  Here we list a few and confirm membership checks.
"""

from zeroseq import (
    enumerate_block_family,
    enumerate_gap_family,
    is_block_family_member,
    parse_seq,
)
from zeroseq.extremal import BlockFamilySpec, GapFamilySpec

# %%
# Layout for k=6, t=0, q=1: two runs of three positions, one +1 in each.
spec = BlockFamilySpec.of(6, 0, 1)
print(spec)
for f in enumerate_block_family(6, 0, 1):
    print("  ", f.to_text(), "total", f.total)

# %%
# t = 1 with a lopsided total leaves a single pattern and its negation.
for f in enumerate_block_family(7, 1, 4):
    print(f.to_text())

# %%
# Membership is a rule check, independent of the generator.
print(is_block_family_member(parse_seq("+--++++--"), 6, 0, 1))
print(is_block_family_member(parse_seq("+-+-+-+-+"), 6, 0, 1))

# %%
# The gap family for d=2, k=8 has 62 members built from runs and plateaus.
gspec = GapFamilySpec.of(2, 8)
print(gspec, "runs", [list(r) for r in gspec.runs], "plateaus", [list(p) for p in gspec.plateaus])
family = enumerate_gap_family(2, 8)
print(len(family), "members, e.g.")
for f in family[:4]:
    print("  ", f.to_text())
