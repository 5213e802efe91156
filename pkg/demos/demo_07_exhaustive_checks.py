"""
Brute-force verification
========================

Every sequence of the threshold length is enumerated as a bit pattern and
checked.  One step below, the survivors must match the generated extremal
family exactly.
"""

from zeroseq.oracle import verify_block_threshold, verify_decomposition, verify_gap_threshold

for args in [(6, 0, 1), (7, 1, 4), (8, 0, 2)]:
    rep = verify_block_threshold(*args)
    print(rep.to_json(timing=True))

print(verify_gap_threshold(2, 8).to_json(timing=True))
print(verify_decomposition(3, 4, 1, 2, trials=500).to_json(timing=True))
