"""Genus lower bounds from characteristic vectors.

Two routes are provided: the adjunction inequality for a single class,
and the characteristic-number set K for a multiple ``d * xi`` of a
primitive class.  On every input both give the same bound; the test
suite checks that.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Optional, Sequence, Tuple

from .errors import PreconditionError
from .lattice import ClassVector, Lattice, divisibility, is_characteristic, orthogonal_defect
from .search import DEFAULT_BUDGET, CharWitness, SearchBudget, feasible_pairings, min_abs_pairing


class Method(str, enum.Enum):
    ADJUNCTION = "adjunction"
    K_SET = "k_set"
    CATALOG = "catalog"
    CONSTRUCTION = "construction"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class BoundReport:
    """A genus bound, read as ``genus >= bound``.

    ``strict`` records that the bound came from a strict inequality
    ``genus > raw``; otherwise the derivation gave ``genus >= raw``.  Either
    way ``bound`` is ``raw`` normalized to an integer and clamped at 0.
    ``exact`` is only set when a matching construction is known, and then
    ``hypotheses`` lists the geometric assumptions it rests on.
    """

    bound: int
    strict: bool
    method: Method
    witness: Optional[CharWitness] = None
    exact: bool = False
    raw: Optional[Fraction] = None
    hypotheses: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("genus bounds are nonnegative")
        if self.method in (Method.ADJUNCTION, Method.K_SET) and self.witness is None:
            raise ValueError(f"{self.method.value} bounds need a witness")


@dataclass(frozen=True)
class KSetResult:
    d: int
    xi: ClassVector
    K: Tuple[int, ...]
    k0: Optional[int]
    witnesses: Dict[int, CharWitness] = field(default_factory=dict, compare=False, repr=False)


class KParity(str, enum.Enum):
    EVEN = "even"
    OPPOSITE_OF_D = "opposite_of_d"


def _require_b_plus_one(lat: Lattice, x: Sequence[int]) -> None:
    if lat.signature.b_plus != 1:
        raise PreconditionError("genus bounds here need b_plus = 1")
    if lat.square(x) <= 0:
        raise PreconditionError("genus bounds here need a class of positive square")


def adjunction_genus_lb(
    lat: Lattice, s: Sequence[int], budget: SearchBudget = DEFAULT_BUDGET
) -> BoundReport:
    """Lower bound ``(S^2 + 2 - m) / 2`` with m the smallest admissible |<c, S>|."""
    s = lat.check(s)
    _require_b_plus_one(lat, s)
    m, witness = min_abs_pairing(lat, s, budget)
    num = lat.square(s) + 2 - m
    assert num % 2 == 0, "pairing parity broken"
    raw = num // 2
    return BoundReport(max(0, raw), False, Method.ADJUNCTION, witness, raw=Fraction(raw))


def characteristic_numbers(xi_sq: int, d: int) -> Tuple[KParity, Tuple[int, ...]]:
    """Possible characteristic numbers in ``[0, 2 d xi^2)`` and their parity rule."""
    if xi_sq <= 0 or d < 1:
        raise PreconditionError("need xi^2 > 0 and d >= 1")
    top = 2 * d * xi_sq
    if xi_sq % 2 == 0:
        return KParity.EVEN, tuple(range(0, top, 2))
    return KParity.OPPOSITE_OF_D, tuple(range(1 - d % 2, top, 2))


def k_set(
    lat: Lattice, xi: Sequence[int], d: int, budget: SearchBudget = DEFAULT_BUDGET
) -> KSetResult:
    xi = lat.check(xi)
    _check_divisible_inputs(lat, xi, d)
    a = lat.square(xi)
    sigma = lat.sigma
    _, allowed = characteristic_numbers(a, d)
    ks = []
    witnesses = {}
    for k in allowed:
        if k > d * a:
            break
        w = feasible_pairings(lat, [xi], [k + d * a], sigma + 4 * k * d, budget)
        if w is not None:
            ks.append(k)
            witnesses[k] = w
    return KSetResult(d, xi, tuple(ks), max(ks) if ks else None, witnesses)


def divisible_genus_lb(
    lat: Lattice, xi: Sequence[int], d: int, budget: SearchBudget = DEFAULT_BUDGET
) -> BoundReport:
    """Bound for ``d * xi`` from the largest characteristic number: genus > k0 d / 2."""
    res = k_set(lat, xi, d, budget)
    if res.k0 is None:
        return BoundReport(0, False, Method.TRIVIAL, notes=("K is empty",))
    half = res.k0 * d
    assert half % 2 == 0
    return BoundReport(
        half // 2 + 1, True, Method.K_SET, res.witnesses[res.k0], raw=Fraction(half // 2)
    )


def _check_divisible_inputs(lat, xi, d):
    _require_b_plus_one(lat, xi)
    if divisibility(xi)[0] != 1:
        raise PreconditionError("xi must be primitive")
    if d < 2:
        raise PreconditionError("multiplicity d must exceed 1")


def characteristic_number(p: int, xi_sq: int, d: int) -> int:
    """The k in ``p = k + (2s + 1) d xi^2`` with ``0 <= k < 2 d xi^2``."""
    return (p + d * xi_sq) % (2 * d * xi_sq)


def formal_dimension(lat: Lattice, c1: Sequence[int], xi: Sequence[int], d: int) -> Fraction:
    """Formal dimension of the based moduli space on the complement of a
    surface in the class ``d * xi``, for the Spin^c structure with first
    Chern class ``c1``."""
    c1, xi = lat.check(c1), lat.check(xi)
    if not is_characteristic(lat, c1):
        raise PreconditionError("c1 must be characteristic")
    _check_divisible_inputs(lat, xi, d)
    a = lat.square(xi)
    p = lat.pair(c1, xi)
    k = characteristic_number(p, a, d)
    return Fraction(lat.square(c1) - lat.sigma, 4) + Fraction((k - d * a) ** 2 - p * p, 4 * a)


def formal_dimension_orthogonal(lat: Lattice, c1, xi, d) -> Fraction:
    """Same value via the square of the part of c1 orthogonal to xi."""
    c1, xi = lat.check(c1), lat.check(xi)
    a = lat.square(xi)
    k = characteristic_number(lat.pair(c1, xi), a, d)
    return (orthogonal_defect(lat, c1, xi) - lat.sigma) / 4 + Fraction((k - d * a) ** 2, 4 * a)


def characteristic_class_bound(
    lat: Lattice, xi: Sequence[int], d: int, h1_zero: bool = False
) -> Optional[BoundReport]:
    """``genus > C(d, 2) xi^2`` when xi is characteristic and the signature is negative.

    ``h1_zero`` is the caller's assertion that H_1(X) = 0; without it the
    bound is not claimed.
    """
    xi = lat.check(xi)
    a = lat.square(xi)
    if not h1_zero or d < 2 or a <= 0 or lat.sigma >= 0 or lat.signature.b_plus != 1:
        return None
    if divisibility(xi)[0] != 1 or not is_characteristic(lat, xi):
        return None
    value = comb(d, 2) * a
    return BoundReport(value + 1, True, Method.CATALOG, raw=Fraction(value), hypotheses=("H1(X) = 0",))
