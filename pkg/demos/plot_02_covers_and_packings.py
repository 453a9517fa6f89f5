"""
Covering versus packing
=======================

For a weight vector c, the cheapest minimal cover is the cover order of c.
Packing edges of the blocker under the same capacities can never beat it.
The LP relaxations meet in the middle with equal exact optima.
"""

from clutterlab import blocker, cover_order, ip_cover_min, ip_pack_max, lp_dual_pair, make_simple

C3 = make_simple(3, [[1, 2], [2, 3], [1, 3]])
G = blocker(C3)

for c in [(1, 1, 1), (2, 2, 2), (3, 1, 2)]:
    cov, pack = lp_dual_pair(G, c)
    print(c,
          "cover order", cover_order(c, C3),
          "| IP cover", ip_cover_min(c, G).value,
          "| LP", cov.value, "=", pack.value,
          "| IP pack", ip_pack_max(c, G).value)

# with all-ones weights the triangle has a gap of one: 2 > 3/2 > 1
