"""Upper bounds on minimal genus from explicit surface configurations.

A configuration is a list of surface types (genus, number of copies) with
the number of transverse positive intersection points between copies.
Resolving every point and tubing the pieces together gives a connected
surface of genus ``sum(g) + P - (m - 1)`` for m copies and P points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Tuple

from .errors import PreconditionError


@dataclass(frozen=True)
class ConstructionPlan:
    """Surface types and their pairwise intersection counts.

    ``intersections[i][j]`` (i != j) is the number of points in which each
    copy of type i meets each copy of type j; ``intersections[i][i]`` is the
    number of points between two distinct copies of type i.
    """

    components: Tuple[Tuple[int, int], ...]
    intersections: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple((int(g), int(m)) for g, m in self.components)
        inter = tuple(tuple(int(v) for v in row) for row in self.intersections)
        n = len(comps)
        if n == 0:
            raise ValueError("a plan needs at least one component")
        if len(inter) != n or any(len(row) != n for row in inter):
            raise ValueError("intersection matrix must be square with one row per component")
        for i in range(n):
            g, m = comps[i]
            if g < 0 or m < 1:
                raise ValueError(f"component {i}: need genus >= 0 and multiplicity >= 1")
            for j in range(n):
                if inter[i][j] < 0 or inter[i][j] != inter[j][i]:
                    raise ValueError("intersection counts must be symmetric and nonnegative")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "intersections", inter)

    @property
    def copies(self) -> int:
        return sum(m for _, m in self.components)

    @property
    def points(self) -> int:
        comps, inter = self.components, self.intersections
        total = 0
        for i, (_, mi) in enumerate(comps):
            total += comb(mi, 2) * inter[i][i]
            for j in range(i + 1, len(comps)):
                total += mi * comps[j][1] * inter[i][j]
        return total

    @property
    def connected(self) -> bool:
        # Copies of one type are interchangeable, so the type graph decides,
        # except that a type with several copies and no self-intersections
        # needs some neighbour to join its copies.
        n = len(self.components)
        inter = self.intersections
        if self.copies == 1:
            return True
        for i, (_, m) in enumerate(self.components):
            if m > 1 and inter[i][i] == 0 and not any(inter[i][j] for j in range(n) if j != i):
                return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and inter[i][j]:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    @classmethod
    def from_dict(cls, data) -> "ConstructionPlan":
        return cls(tuple(map(tuple, data["components"])), tuple(map(tuple, data["intersections"])))

    def to_dict(self):
        return {
            "components": [list(c) for c in self.components],
            "intersections": [list(r) for r in self.intersections],
        }


def resolve_genus(plan: ConstructionPlan) -> int:
    """Genus of the connected surface obtained by resolving all points."""
    if not plan.connected:
        raise PreconditionError("plan does not resolve to a connected surface")
    genera = sum(g * m for g, m in plan.components)
    return genera + plan.points - (plan.copies - 1)


def multiple_class_upper_bound(xi_sq: int, g1: int, d: int) -> int:
    """Genus of d parallel copies of a genus-g1 surface, resolved."""
    if xi_sq <= 0 or g1 < 0 or d < 1:
        raise PreconditionError("need xi^2 > 0, g1 >= 0, d >= 1")
    return d * g1 + xi_sq * comb(d, 2) - (d - 1)


def multiple_class_plan(xi_sq: int, g1: int, d: int) -> ConstructionPlan:
    return ConstructionPlan(((g1, d),), ((xi_sq,),))


def h_form_plan(p: int, q: int) -> ConstructionPlan:
    """p spheres in the first factor class meeting q spheres in the second."""
    p, q = abs(p), abs(q)
    if p == 0 or q == 0:
        raise PreconditionError("h_form_plan needs pq != 0")
    return ConstructionPlan(((0, p), (0, q)), ((0, 1), (1, 0)))


def e_form_plan(p: int, q: int) -> ConstructionPlan:
    """(p, q) = q (1, 1) + (p - q) (1, 0) in the odd form <1> + <-1>, for p > q >= 0."""
    p, q = abs(p), abs(q)
    if p <= q:
        raise PreconditionError("e_form_plan needs |p| > |q|")
    r = p - q
    base = ((r - 1) * (r - 2) // 2, 1)
    if q == 0:
        return ConstructionPlan((base,), ((0,),))
    return ConstructionPlan((base, (0, q)), ((0, r), (r, 0)))


def reduced_class_plan(p: int, qs: Sequence[int]) -> ConstructionPlan:
    """Spheres for xi_0 (p - sum q copies) and xi_0 + xi_i (q_i copies each).

    Only for classes whose nonzero q_i all exceed 2.
    """
    qs = sorted((q for q in qs if q), reverse=True)
    if any(q <= 2 for q in qs):
        raise PreconditionError("reduced_class_plan needs every nonzero q_i > 2")
    rest = p - sum(qs)
    if rest < 0:
        raise PreconditionError("need sum(q_i) <= p")
    comps = []
    if rest:
        comps.append((0, rest))
    comps.extend((0, q) for q in qs)
    n = len(comps)
    inter = [[1] * n for _ in range(n)]
    for i in range(n):
        # copies of xi_0 meet pairwise once; copies of xi_0 + xi_i are disjoint
        inter[i][i] = 1 if (rest and i == 0) else 0
    return ConstructionPlan(tuple(comps), tuple(map(tuple, inter)))


def reduced_class_construction(p: int, qs: Sequence[int]) -> Optional[int]:
    """Genus of the explicit representative of (p, q_1, ..., q_m).

    Valid when the basis classes are represented by disjoint spheres, at
    most nine q_i are nonzero and the q_i above 2 sum to at most p.  The
    handle moves used for q_i in {1, 2} only enter through the closed
    formula.  Returns None when the construction does not apply.
    """
    qs = sorted((abs(q) for q in qs if q), reverse=True)
    if len(qs) > 9 or p <= 0:
        return None
    if sum(q for q in qs if q > 2) > p:
        return None
    xi_sq = p * p - sum(q * q for q in qs)
    if xi_sq <= 0:
        return None
    num = xi_sq - 3 * p + sum(qs)
    assert num % 2 == 0
    return num // 2 + 1


def primitive_bound_transfer(xi_sq: int, d: int, delta: int) -> Fraction:
    """From ``g(d xi) > (d xi^2 - delta) d / 2`` deduce ``g(xi) > (xi^2 - delta) / 2``.

    Returns the right-hand side; see :func:`genus_from_strict`.
    """
    if d < 2:
        raise PreconditionError("the transfer needs d > 1")
    return Fraction(xi_sq - delta, 2)


def genus_from_strict(value) -> int:
    """Smallest nonnegative integer genus strictly above ``value``."""
    v = Fraction(value)
    return max(0, v.numerator // v.denominator + 1)
