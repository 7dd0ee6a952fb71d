"""
Classes in S^2 x S^2 and CP^2 # -CP^2
=====================================

Signature-zero forms: the hyperbolic plane H and the odd form <1> + <-1>.
With sphere representatives for the basis classes the bounds are sharp,
and the explicit constructions below meet them.
"""

from mingenus import Lattice, adjunction_genus_lb, e_form_plan, h_form_plan, resolve_genus

H = Lattice.hyperbolic()
E = Lattice.odd(1)

# H: (p, q) has square 2pq; the engine gives (|p|-1)(|q|-1)
print("H form: lower bound / construction")
for p in range(1, 6):
    row = []
    for q in range(1, 6):
        lb = adjunction_genus_lb(H, (p, q)).bound
        ub = resolve_genus(h_form_plan(p, q))
        row.append(f"{lb}/{ub}")
    print("  ", "  ".join(f"{c:>6}" for c in row))

# E: only p > q matters up to symmetry; (1, 0) and (2, 0) are spheres
print("\nE form (p > q >= 0): lower bound / construction")
for p in range(1, 7):
    cells = []
    for q in range(p):
        lb = adjunction_genus_lb(E, (p, q)).bound
        ub = resolve_genus(e_form_plan(p, q))
        cells.append(f"{lb}/{ub}")
    print(f"  p={p}:", "  ".join(cells))
