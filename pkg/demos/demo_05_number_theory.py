"""
Liouville and Legendre sequences
================================

The Liouville function and Legendre symbols over the primes are +-1
sequences with small partial sums, so zero-sum blocks keep turning up.
"""

from zeroseq.numtheory import (
    legendre_zs_blocks,
    liouville_ap_zs,
    liouville_sieve,
    liouville_zs_blocks,
)

limit = 10**6
table = liouville_sieve(limit)
print("lambda(1..20):", table.values[:20].tolist())
print("partial sum up to", limit, "=", int(table.partials[-1]))

# %%
for k in (2, 4, 6, 8):
    rep = liouville_zs_blocks(limit, k, table)
    print(f"k={k}: {rep.count} zero-sum blocks, first at {rep.first_starts[:5]}")

# %%
# Along multiples of d.
print(liouville_ap_zs(limit, 4, 3, table).to_json())

# %%
for p in (3, 5, 7):
    rep = legendre_zs_blocks(p, limit, 4)
    print(f"(q/{p}) over primes: {rep.count} zero-sum 4-blocks, partial sum {rep.partial_sum}")
