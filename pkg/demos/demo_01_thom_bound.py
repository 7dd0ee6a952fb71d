"""
Degree-d curves in CP^2
=======================

The intersection form of CP^2 is <1>.  For the class d times the line the
engine searches characteristic vectors c (odd integers here) with c^2 > 1
and minimizes |<c, d>|, then reads off (d^2 + 2 - m) / 2.  Smooth degree-d
curves have genus (d-1)(d-2)/2, so the lower bound is attained.
"""

from mingenus import Lattice, adjunction_genus_lb, multiple_class_upper_bound

cp2 = Lattice(((1,),))

print(f"{'d':>3} {'lower':>6} {'upper':>6}  witness c")
for d in range(1, 13):
    lower = adjunction_genus_lb(cp2, (d,))
    # d parallel lines meeting pairwise once, all points resolved
    upper = multiple_class_upper_bound(1, 0, d)
    print(f"{d:>3} {lower.bound:>6} {upper:>6}  {lower.witness.c}")

# The same bound through the characteristic-number set K of d * line.
from mingenus import divisible_genus_lb, k_set

res = k_set(cp2, (1,), 5)
print("\nK for d = 5:", res.K, " k0 =", res.k0)
print("bound from k0:", divisible_genus_lb(cp2, (1,), 5).bound)
