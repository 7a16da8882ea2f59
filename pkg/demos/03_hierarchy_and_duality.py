"""
Weight hierarchies and the duality partition
============================================

The r-th minimum weight d_r is the smallest poset weight of any
r-dimensional subcode.  Two independent computations must agree: a scan
over order ideals driven by matroid ranks, and a brute-force walk over
every subspace.  The hierarchy of a code and the hierarchy of its dual
(under the reversed order) lock together into a partition of 1..n.
"""

from posetcode import (
    LinearCode,
    Poset,
    duality_partition,
    gf,
    weight_hierarchy,
)

code = LinearCode.from_generator(gf(2), [(1, 1, 0, 0), (0, 0, 1, 1)])
poset = Poset.from_cover_relations(4, [(1, 2), (1, 3)])

# the fast path scans ideals by ascending size and stops at the first
# one whose shortened subcode reaches dimension r
fast = weight_hierarchy(code, poset)
print(f"ideal-scan weights: {fast.weights}")
for r, (w, ideal) in enumerate(zip(fast.weights, fast.witnesses), start=1):
    print(f"  d_{r} = {w}, witness ideal {set(ideal)}")

# the oracle enumerates every r-dimensional subcode through its unique
# reduced-echelon basis and takes the definitional minimum
slow = weight_hierarchy(code, poset, method="bruteforce")
print(f"bruteforce weights: {slow.weights}")
for r, basis in enumerate(slow.witnesses, start=1):
    print(f"  d_{r} witness basis: {basis}")
assert fast.weights == slow.weights

# both hierarchies sit inside the window r <= d_r <= n - k + r and
# increase strictly; the library raises SelfCheckError otherwise

# duality: {d_r} and {n + 1 - d'_s} tile 1..n with no overlap
d = duality_partition(code, poset)
print(f"\nprimal weights {d.weights}, dual weights {d.dual_weights}")
print(f"first  = {set(d.first)}")
print(f"second = {set(d.second)}")
print(f"union  = {sorted(set(d.first) | set(d.second))}")
