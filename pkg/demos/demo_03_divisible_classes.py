"""
Divisible classes and the characteristic-number set
===================================================

For a multiple d * xi of a primitive class the set K collects the k in
[0, d xi^2] for which some characteristic vector pairs to k + d xi^2 with
square above sigma + 4kd.  Its maximum k0 gives genus > k0 d / 2.  The
adjunction bound on d * xi gives the same number, since
k0 = d xi^2 - m with m the best pairing for xi itself.
"""

from mingenus import (
    Lattice,
    adjunction_genus_lb,
    divisible_genus_lb,
    formal_dimension,
    k_set,
    min_abs_pairing,
)

lat = Lattice.odd(3)
xi = (3, 1, 1, 1)
m, _ = min_abs_pairing(lat, xi)
a = lat.square(xi)
print(f"xi = {xi}, xi^2 = {a}, smallest admissible |<c, xi>| = {m}")

for d in range(2, 6):
    res = k_set(lat, xi, d)
    lb_k = divisible_genus_lb(lat, xi, d).bound
    lb_a = adjunction_genus_lb(lat, [d * v for v in xi]).bound
    print(f"d={d}: K={list(res.K)} k0={res.k0} (d xi^2 - m = {d * a - m})  bounds {lb_k} {lb_a}")

# The formal dimension only depends on k, not on how far c1 is shifted by 2d xi.
c1 = (3, 1, 1, 1)
for s in range(-2, 3):
    shifted = tuple(c + 2 * 3 * s * x for c, x in zip(c1, xi))
    print("s =", s, "dimension", formal_dimension(lat, shifted, xi, 3))
