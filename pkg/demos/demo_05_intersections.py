"""
Forced intersections when b2+ = 2
=================================

Two classes with zero algebraic intersection can still be forced to meet
geometrically.  A characteristic vector with c^2 > sigma and small
nonnegative pairings bounds the number N of +-1 point pairs; the bound is
compared with the one from the G-signature theorem.
"""

from mingenus import Lattice, intersection_lb

HH = Lattice.hyperbolic().direct_sum(Lattice.hyperbolic())

print("S^2 x S^2 # S^2 x S^2, spheres (p,q,0,0) and (0,0,r,s)")
for p, q, r, s in [(2, 2, 2, 2), (3, 2, 2, 2), (3, 3, 3, 2)]:
    rep = intersection_lb(HH, (p, q, 0, 0), (0, 0, r, s), 0, 0)
    print(f"  {(p, q, r, s)}: N >= {rep.n_lb}   (G-signature: {rep.gilmer_lb})   c = {rep.witness.c}")

two = Lattice.diagonal(1, 1)
print("\nCP^2 # CP^2, (p, 1) and (1, -p) with the smallest genus each class allows")
for p in range(2, 7):
    g = (p * p + 1 - 3 * (p + 1)) // 2 + 2
    rep = intersection_lb(two, (p, 1), (1, -p), g, g)
    print(f"  p={p}: genus {g}, N >= {rep.n_lb}")
