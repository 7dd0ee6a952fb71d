"""
Reduced classes in CP^2 # n(-CP^2)
==================================

A class (p, q_1, ..., q_n) with q nonincreasing is reduced when
p >= q_1 + q_2 + q_3 and at most nine q_i are nonzero.  For those the
engine bound is (xi^2 - 3p + sum q) / 2 + 1, realised by the vector
(3, 1, ..., 1), and for genuine rational surfaces it is the minimal genus.
"""

from mingenus import (
    Lattice,
    ReducedForm,
    adjunction_genus_lb,
    closed_form_lb,
    list_reduced_classes_with_genus_le,
    reduced_search_region,
)

for p, qs in [(5, (2, 2, 1)), (7, (3, 2, 2)), (10, (3, 3, 3, 1))]:
    rf = ReducedForm(p, qs)
    lat = Lattice.odd(rf.n)
    eng = adjunction_genus_lb(lat, rf.as_class())
    cf = closed_form_lb("reduced", p=p, qs=qs)
    print(f"{rf.as_class()}: engine {eng.bound} (c = {eng.witness.c}), closed form {cf.bound}")

# Only finitely many reduced classes have small bound.
for g in range(3):
    print(f"\ng <= {g}, n = 4, q1 cutoffs {reduced_search_region(4, g)}")
    for rf in list_reduced_classes_with_genus_le(4, g):
        print("  ", rf.as_class(), "square", rf.square)
