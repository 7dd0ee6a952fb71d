"""Lower bounds on geometric intersections of algebraically disjoint classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .errors import PreconditionError
from .lattice import Lattice
from .search import DEFAULT_BUDGET, CharWitness, SearchBudget, feasible_pairings, min_pairing_sum_2


@dataclass(frozen=True)
class IntersectionReport:
    """``n_lb`` bounds the number of pairs of +-1 intersection points.

    ``hypothesis_ok`` is False when no characteristic vector meets the
    hypotheses for the given genera; then ``n_lb`` is the trivial 0.
    """

    n_lb: int
    witness: Optional[CharWitness]
    hypothesis_ok: bool
    gilmer_lb: Optional[int]
    bound_sum: Optional[int] = None  # lower bound on g1 + g2 + N


def _check_disjoint_family(lat: Lattice, classes, genera) -> None:
    n = lat.signature.b_plus
    if n < 2 or len(classes) != n:
        raise PreconditionError(f"need b_plus = number of classes > 1 (b_plus = {n}, got {len(classes)})")
    if len(genera) != len(classes) or any(g < 0 for g in genera):
        raise PreconditionError("one nonnegative genus per class")
    for i, x in enumerate(classes):
        if lat.square(x) <= 0:
            raise PreconditionError(f"class {x} must have positive square")
        for y in classes[:i]:
            if lat.pair(x, y) != 0:
                raise PreconditionError(f"classes {y} and {x} are not algebraically disjoint")


def _pairing_ceilings(lat, classes, genera) -> List[int]:
    # largest t with t < chi + S^2, i.e. t <= 1 - 2g + S^2
    return [1 - 2 * g + lat.square(x) for x, g in zip(classes, genera)]


def disjointness_obstruction(
    lat: Lattice,
    classes: Sequence[Sequence[int]],
    genera: Sequence[int],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[CharWitness]:
    """A characteristic c showing the classes have no disjoint representatives
    of the given genera, or None if the search finds none.

    c must satisfy c^2 > sigma and ``0 <= <c, S_i> < chi_i + S_i^2`` for
    every i.  Grid points are tried in order of increasing total pairing.
    """
    classes = tuple(lat.check(x) for x in classes)
    genera = tuple(int(g) for g in genera)
    _check_disjoint_family(lat, classes, genera)
    tops = _pairing_ceilings(lat, classes, genera)
    if any(t < 0 for t in tops):
        return None
    parities = [lat.square(x) % 2 for x in classes]
    ranges = [range(p, t + 1, 2) for p, t in zip(parities, tops)]
    points = sorted(itertools.product(*ranges), key=lambda ts: (sum(ts), ts))
    sigma = lat.sigma
    for ts in points:
        w = feasible_pairings(lat, classes, ts, sigma, budget)
        if w is not None:
            return w
    return None


def gilmer_lb(s1_sq: int, s2_sq: int, g1: int, g2: int, sum_even: bool) -> Optional[int]:
    """g-signature comparison bound on N, available when S1 + S2 is divisible by 2."""
    if s1_sq <= 0 or s2_sq <= 0:
        raise PreconditionError("squares must be positive")
    if not sum_even:
        return None
    total = s1_sq + s2_sq
    return max(0, -(-total // 4) - 1 - g1 - g2)


def intersection_lb(
    lat: Lattice,
    s1: Sequence[int],
    s2: Sequence[int],
    g1: int,
    g2: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> IntersectionReport:
    """Lower bound on the pairs of +-1 points between surfaces of genus g1, g2."""
    s1, s2 = lat.check(s1), lat.check(s2)
    if lat.signature.b_plus != 2:
        raise PreconditionError("intersection_lb needs b_plus = 2")
    _check_disjoint_family(lat, (s1, s2), (g1, g2))
    a1, a2 = lat.square(s1), lat.square(s2)
    sum_even = all((u + v) % 2 == 0 for u, v in zip(s1, s2))
    gil = gilmer_lb(a1, a2, g1, g2, sum_even)
    t1_max, t2_max = _pairing_ceilings(lat, (s1, s2), (g1, g2))
    if t1_max < 0 or t2_max < 0:
        return IntersectionReport(0, None, False, gil)
    found = min_pairing_sum_2(lat, s1, s2, (t1_max, t2_max), budget)
    if found is None:
        return IntersectionReport(0, None, False, gil)
    t1, t2, witness = found
    num = a1 + a2 - t1 - t2
    assert num % 2 == 0
    total = num // 2 + 1
    return IntersectionReport(max(0, total - g1 - g2), witness, True, gil, total)
