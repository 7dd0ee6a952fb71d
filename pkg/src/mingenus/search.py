"""Characteristic vector search.

Fixing the pairings ``<c, x_i> = t_i`` against classes spanning a maximal
positive subspace leaves a coset ``c0 + 2M`` where ``M`` is the integer
orthogonal complement.  The form is negative definite on ``M``, so
maximizing ``c^2`` over the coset is a closest vector problem in ``M``
under ``-G``.  It is solved by exact depth-first (Fincke-Pohst /
Schnorr-Euchner) enumeration over an LLL-reduced basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import List, Optional, Sequence, Tuple

from . import _intmat
from .errors import BudgetExhausted, PreconditionError
from .lattice import ClassVector, Lattice, characteristic_basepoint, divisibility, is_characteristic


@dataclass(frozen=True)
class SearchBudget:
    """Caps on enumeration work.

    ``max_abs_pairing=None`` means: use :func:`default_pairing_cap` for the
    query at hand.
    """

    max_nodes: int = 2_000_000
    max_abs_pairing: Optional[int] = None

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_abs_pairing is not None and self.max_abs_pairing <= 0:
            raise ValueError("max_abs_pairing must be positive")

    def pairing_cap(self, lat: Lattice, xi: Sequence[int]) -> int:
        if self.max_abs_pairing is not None:
            return self.max_abs_pairing
        return default_pairing_cap(lat, xi)


DEFAULT_BUDGET = SearchBudget()


def default_pairing_cap(lat: Lattice, xi: Sequence[int]) -> int:
    return 4 * (abs(lat.sigma) + lat.square(xi) + lat.rank * lat.max_entry)


@dataclass(frozen=True)
class CharWitness:
    """A characteristic vector together with its square and pairings."""

    c: ClassVector
    square: int
    pairings: Tuple[int, ...]

    @classmethod
    def of(cls, lat: Lattice, c: Sequence[int], classes: Sequence[Sequence[int]]) -> "CharWitness":
        c = lat.check(c)
        return cls(c, lat.square(c), tuple(lat.pair(c, x) for x in classes))

    def verify(self, lat: Lattice, classes: Sequence[Sequence[int]]) -> bool:
        return (
            is_characteristic(lat, self.c)
            and self.square == lat.square(self.c)
            and self.pairings == tuple(lat.pair(self.c, x) for x in classes)
        )


# -- the constrained coset ---------------------------------------------------


class _Coset:
    """Precomputed data for characteristic c with prescribed pairings.

    Built once per (lattice, constraint classes); each query only changes
    the right-hand sides ``t``.
    """

    def __init__(self, lat: Lattice, xs: Tuple[ClassVector, ...]):
        self.lat = lat
        self.xs = xs
        g = lat.gram
        self.w = characteristic_basepoint(lat)
        self.rows = [lat.dual(x) for x in xs]  # <., x_i> as row vectors
        self.w_pair = [sum(a * b for a, b in zip(r, self.w)) for r in self.rows]
        self.ech = _intmat.ColumnEchelon(self.rows, ncols=lat.rank)
        kernel = self.ech.kernel()
        neg = [[-v for v in row] for row in g]
        if kernel:
            kernel = _intmat.lll_reduce(kernel, neg)
        self.basis = kernel
        k = len(kernel)
        # q = -B^T G B, positive definite when the x_i span a maximal positive subspace
        self.q = [[_intmat.bilinear(neg, kernel[i], kernel[j]) for j in range(k)] for i in range(k)]
        try:
            self.r, self.d = _intmat.ldl(self.q)
        except ValueError:
            raise PreconditionError(
                "orthogonal complement of the constraint classes is not negative definite"
            ) from None
        self.bg = [_intmat.matvec(g, v) for v in kernel]  # rows of B^T G
        self.qinv = _intmat.inverse_rational(self.q) if k else []

    def base_vector(self, ts: Sequence[int]) -> Optional[List[int]]:
        """Some characteristic c0 with <c0, x_i> = t_i, or None."""
        rhs = []
        for t, wp in zip(ts, self.w_pair):
            if (t - wp) % 2:
                return None
            rhs.append((t - wp) // 2)
        lam = self.ech.solve(rhs)
        if lam is None:
            return None
        return [wi + 2 * li for wi, li in zip(self.w, lam)]

    def optimize(self, ts: Sequence[int], above: Optional[int], max_nodes: int):
        """Maximal c^2 over the coset, restricted to c^2 > above if given.

        Returns (square, c) with c the lexicographically smallest maximizer,
        or None if the coset is empty or nothing beats ``above``.
        """
        c0 = self.base_vector(ts)
        if c0 is None:
            return None
        k = len(self.basis)
        c0_sq = _intmat.bilinear(self.lat.gram, c0, c0)
        if k == 0:
            if above is not None and c0_sq <= above:
                return None
            return c0_sq, tuple(c0)
        # c = c0 + 2 B z;  c^2 = c0^2 + 4 h.z - 4 z^T q z,  h = B^T G c0
        h = [sum(a * b for a, b in zip(row, c0)) for row in self.bg]
        y = [sum(a * b for a, b in zip(row, h)) / 2 for row in self.qinv]
        top = c0_sq + 2 * sum(hi * yi for hi, yi in zip(h, y))
        # c^2 = top - 4 * dist(z),  dist(z) = (z - y)^T q (z - y)
        if above is None:
            radius, strict = None, False
        else:
            radius = (top - above) / 4
            if radius <= 0:
                return None
            strict = True
        best, points = _closest(self.r, self.d, y, radius, strict, max_nodes)
        if not points:
            return None
        square = top - 4 * best
        assert square.denominator == 1
        cands = []
        for z in points:
            c = list(c0)
            for zi, v in zip(z, self.basis):
                if zi:
                    for j, vj in enumerate(v):
                        c[j] += 2 * zi * vj
            cands.append(tuple(c))
        return int(square), min(cands)


def _closest(r, d, y, radius, strict, max_nodes):
    """All z minimizing (z - y)^T R^T D R (z - y), within radius.

    ``radius=None`` means unbounded (the first leaf reached is the Babai
    point and sets the bound).  Returns (best distance, list of minimizers).

    The rational data is put over common denominators so the inner loop
    runs on Python ints: centers are C_i / S and distances are scaled by
    K = S^2 * M.
    """
    n = len(d)
    rn = lcm(*(x.denominator for row in r for x in row))
    ny = lcm(*(v.denominator for v in y))
    s = rn * ny
    m = lcm(*(v.denominator for v in d))
    rs = [[int(r[i][j] * rn) for j in range(n)] for i in range(n)]
    ys = [int(v * ny) for v in y]
    ds = [int(v * m) for v in d]
    scale = s * s * m
    if radius is None:
        bound = None
    else:
        rad = radius * scale
        # integer dist < rad  <=>  dist <= ceil(rad) - 1;  dist <= rad  <=>  dist <= floor(rad)
        bound = -((-rad.numerator) // rad.denominator) - 1 if strict else rad.numerator // rad.denominator
    z = [0] * n
    zs = [0] * n  # ny * z_j - Y_j
    best = None
    points = []
    nodes = 0

    def descend(i, partial):
        nonlocal bound, best, points, nodes
        row = rs[i]
        ctr = rn * ys[i] - sum(row[j] * zs[j] for j in range(i + 1, n))
        di = ds[i]
        z0 = (2 * ctr + s) // (2 * s)
        up, down = z0, z0 - 1
        up_open = down_open = True
        while up_open or down_open:
            if up_open and (not down_open or abs(s * up - ctr) <= abs(ctr - s * down)):
                cand = up
                up += 1
                going_up = True
            else:
                cand = down
                down -= 1
                going_up = False
            e = s * cand - ctr
            dist = partial + di * e * e
            if bound is not None and dist > bound:
                if going_up:
                    up_open = False
                else:
                    down_open = False
                continue
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExhausted("enumeration node budget exhausted", nodes=nodes)
            z[i] = cand
            zs[i] = ny * cand - ys[i]
            if i == 0:
                if best is None or dist < best:
                    best = bound = dist
                    points = [tuple(z)]
                else:
                    points.append(tuple(z))
            else:
                descend(i - 1, dist)

    descend(n - 1, 0)
    if best is None:
        return None, []
    return Fraction(best, scale), points


@lru_cache(maxsize=4096)
def _coset(lat: Lattice, xs: Tuple[ClassVector, ...]) -> _Coset:
    return _Coset(lat, xs)


def _check_constraint_classes(lat: Lattice, xs: Sequence[ClassVector]) -> None:
    if len(xs) != lat.signature.b_plus:
        raise PreconditionError(
            f"need exactly b_plus = {lat.signature.b_plus} constraint classes, got {len(xs)}"
        )
    for i, x in enumerate(xs):
        if lat.square(x) <= 0:
            raise PreconditionError(f"constraint class {x} must have positive square")
        for y in xs[:i]:
            if lat.pair(x, y) != 0:
                raise PreconditionError(f"constraint classes {y} and {x} are not orthogonal")


def _optimize(lat, xs, ts, above, budget):
    return _coset(lat, xs).optimize(ts, above, budget.max_nodes)


# -- public operations ---------------------------------------------------------


def max_square_with_pairings(
    lat: Lattice,
    constraints: Sequence[Tuple[Sequence[int], int]],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[Tuple[int, CharWitness]]:
    """Maximize c^2 over characteristic c with <c, x_i> = t_i.

    The classes must be pairwise orthogonal with positive squares, one per
    positive direction of the form.  Returns None when no characteristic
    vector has the requested pairings (a parity or divisibility
    obstruction).
    """
    xs = tuple(lat.check(x) for x, _ in constraints)
    ts = tuple(int(t) for _, t in constraints)
    _check_constraint_classes(lat, xs)
    res = _optimize(lat, xs, ts, None, budget)
    if res is None:
        return None
    square, c = res
    return square, CharWitness(c, square, ts)


def min_abs_pairing(
    lat: Lattice, xi: Sequence[int], budget: SearchBudget = DEFAULT_BUDGET
) -> Tuple[int, CharWitness]:
    """Smallest |<c, xi>| over characteristic c with c^2 > sigma.

    Scans t = 0 or 1, then upward in steps of 2.  A multiple ``d * xi0`` is
    reduced to the primitive xi0 first since the admissible vectors are the
    same.  The witness is the square-maximizing vector at the optimal t.
    """
    xi = lat.check(xi)
    if lat.signature.b_plus != 1:
        raise PreconditionError("min_abs_pairing needs b_plus = 1")
    if lat.square(xi) <= 0:
        raise PreconditionError("min_abs_pairing needs a class of positive square")
    d, prim = divisibility(xi)
    sigma = lat.sigma
    cap = budget.pairing_cap(lat, xi)
    t = lat.square(prim) % 2
    while d * t <= cap:
        res = _optimize(lat, (prim,), (t,), sigma, budget)
        if res is not None:
            square, c = res
            return d * t, CharWitness(c, square, (d * t,))
        t += 2
    raise BudgetExhausted(
        f"no admissible characteristic vector with |<c, xi>| <= {cap}",
        last_t=d * (t - 2),
        cap=cap,
    )


def brute_force_min_pairing(
    lat: Lattice, xi: Sequence[int], box: int
) -> Optional[Tuple[int, CharWitness]]:
    """Exhaustive scan of the box |c_i| <= box; independent check of min_abs_pairing.

    Among vectors reaching the minimum, one with nonnegative pairing and
    largest square is returned (first in descending scan order).
    """
    xi = lat.check(xi)
    sigma = lat.sigma
    row = lat.dual(xi)
    best = None
    for c in itertools.product(range(box, -box - 1, -1), repeat=lat.rank):
        if not is_characteristic(lat, c):
            continue
        sq = lat.square(c)
        if sq <= sigma:
            continue
        p = sum(a * b for a, b in zip(row, c))
        key = (abs(p), p < 0, -sq)
        if best is None or key < best[0]:
            best = (key, c, sq, p)
    if best is None:
        return None
    _, c, sq, p = best
    return abs(p), CharWitness(tuple(c), sq, (p,))


def min_pairing_sum_2(
    lat: Lattice,
    x1: Sequence[int],
    x2: Sequence[int],
    ranges: Tuple[int, int],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[Tuple[int, int, CharWitness]]:
    """Minimize t1 + t2 over characteristic c with c^2 > sigma and
    ``<c, x_i> = t_i in [0, t_i_max]``; ties go to the smaller t1."""
    x1, x2 = lat.check(x1), lat.check(x2)
    if lat.signature.b_plus != 2:
        raise PreconditionError("min_pairing_sum_2 needs b_plus = 2")
    xs = (x1, x2)
    _check_constraint_classes(lat, xs)
    t1_max, t2_max = ranges
    p1, p2 = lat.square(x1) % 2, lat.square(x2) % 2
    sigma = lat.sigma
    for total in range(p1 + p2, t1_max + t2_max + 1, 2):
        for t1 in range(p1, min(total, t1_max) + 1, 2):
            t2 = total - t1
            if t2 > t2_max:
                continue
            res = _optimize(lat, xs, (t1, t2), sigma, budget)
            if res is not None:
                square, c = res
                return t1, t2, CharWitness(c, square, (t1, t2))
    return None


def feasible_pairings(lat, xs, ts, above, budget=DEFAULT_BUDGET):
    """Square-maximizing characteristic c with the given pairings and c^2 > above.

    Thin wrapper used by the bound modules; returns a CharWitness or None.
    """
    xs = tuple(lat.check(x) for x in xs)
    ts = tuple(ts)
    _check_constraint_classes(lat, xs)
    res = _optimize(lat, xs, ts, above, budget)
    if res is None:
        return None
    square, c = res
    return CharWitness(c, square, ts)
