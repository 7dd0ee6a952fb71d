"""Unimodular integer lattices: pairings, signature, characteristic vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from numbers import Integral
from typing import NamedTuple, Sequence, Tuple

from . import _intmat
from .errors import DimensionError, LatticeError, NotUnimodularError, PreconditionError

ClassVector = Tuple[int, ...]


def as_class(x: Sequence[int]) -> ClassVector:
    """Normalize a coefficient sequence to a tuple of Python ints."""
    out = []
    for v in x:
        if isinstance(v, bool) or not isinstance(v, Integral):
            raise TypeError(f"class coefficients must be integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


class Signature(NamedTuple):
    b_plus: int
    b_minus: int

    @property
    def sigma(self) -> int:
        return self.b_plus - self.b_minus


@dataclass(frozen=True)
class Lattice:
    """A symmetric unimodular Gram matrix over the integers.

    The lattice stands for H^2(X)/torsion with its intersection pairing, so
    construction rejects anything that is not symmetric with det = +-1.
    """

    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(as_class(row) for row in self.gram)
        n = len(rows)
        if n == 0:
            raise LatticeError("Gram matrix must be nonempty")
        if any(len(r) != n for r in rows):
            raise LatticeError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise LatticeError(f"Gram matrix not symmetric at ({i}, {j})")
        d = _intmat.det(rows)
        if d not in (1, -1):
            raise NotUnimodularError(d)
        object.__setattr__(self, "gram", rows)

    # -- constructors -------------------------------------------------------

    @classmethod
    def diagonal(cls, *entries: int) -> "Lattice":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def hyperbolic(cls) -> "Lattice":
        return cls(((0, 1), (1, 0)))

    @classmethod
    def odd(cls, n: int) -> "Lattice":
        """<1> + n<-1>, the form of CP^2 # n(-CP^2)."""
        return cls.diagonal(1, *([-1] * n))

    def direct_sum(self, other: "Lattice") -> "Lattice":
        a, b = self.rank, other.rank
        rows = [list(r) + [0] * b for r in self.gram] + [[0] * a + list(r) for r in other.gram]
        return Lattice(tuple(map(tuple, rows)))

    def reversed(self) -> "Lattice":
        """Same lattice with the opposite orientation (negated form)."""
        return Lattice(tuple(tuple(-v for v in row) for row in self.gram))

    # -- basic algebra ------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.gram)

    def check(self, x: Sequence[int]) -> ClassVector:
        x = as_class(x)
        if len(x) != self.rank:
            raise DimensionError(f"vector of length {len(x)} in a rank {self.rank} lattice")
        return x

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return _intmat.bilinear(self.gram, self.check(x), self.check(y))

    def square(self, x: Sequence[int]) -> int:
        return self.pair(x, x)

    def dual(self, x: Sequence[int]) -> ClassVector:
        """Row ``x^T G``: the functional y -> <x, y> in the hom-dual basis."""
        return tuple(_intmat.matvec(self.gram, self.check(x)))

    @cached_property
    def signature(self) -> Signature:
        return _signature(self.gram)

    @property
    def sigma(self) -> int:
        return self.signature.sigma

    @property
    def max_entry(self) -> int:
        return max(abs(v) for row in self.gram for v in row)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))


def _signature(gram) -> Signature:
    """Congruence diagonalization over Q with symmetric pivoting.

    When every remaining diagonal entry is zero but an off-diagonal one is
    not, a 2x2 block [[0, a], [a, 0]] is eliminated at once; it contributes
    one positive and one negative direction.
    """
    a = [[Fraction(v) for v in row] for row in gram]
    live = list(range(len(a)))
    pos = neg = 0
    while live:
        i = next((i for i in live if a[i][i] != 0), None)
        if i is not None:
            p = a[i][i]
            live.remove(i)
            if p > 0:
                pos += 1
            else:
                neg += 1
            for r in live:
                f = a[r][i] / p
                if f:
                    for c in live:
                        a[r][c] -= f * a[i][c]
            continue
        pair = next(((i, j) for i in live for j in live if i < j and a[i][j] != 0), None)
        if pair is None:
            raise LatticeError("degenerate form")
        i, j = pair
        s = a[i][j]
        live.remove(i)
        live.remove(j)
        pos += 1
        neg += 1
        # Schur complement of the block [[0, s], [s, 0]], inverse [[0, 1/s], [1/s, 0]]
        for r in live:
            ri, rj = a[r][i], a[r][j]
            for c in live:
                a[r][c] -= (ri * a[j][c] + rj * a[i][c]) / s
    return Signature(pos, neg)


# -- module-level operations ---------------------------------------------------


def pairing(lat: Lattice, x: Sequence[int], y: Sequence[int]) -> int:
    return lat.pair(x, y)


def signature(lat: Lattice) -> Signature:
    return lat.signature


def is_characteristic(lat: Lattice, c: Sequence[int]) -> bool:
    """True iff <c, e_i> = <e_i, e_i> mod 2 for every basis vector e_i."""
    c = lat.check(c)
    row = _intmat.matvec(lat.gram, c)
    return all((row[i] - lat.gram[i][i]) % 2 == 0 for i in range(lat.rank))


def characteristic_basepoint(lat: Lattice) -> ClassVector:
    """A 0/1 characteristic vector; all others differ from it by 2*lattice."""
    diag = [lat.gram[i][i] for i in range(lat.rank)]
    w = _intmat.solve_mod2(lat.gram, diag)
    if w is None:  # impossible for det = +-1
        raise AssertionError("no characteristic vector found for a unimodular form")
    return tuple(w)


def divisibility(x: Sequence[int]) -> Tuple[int, ClassVector]:
    """Split ``x = d * xi`` with xi primitive and d > 0."""
    x = as_class(x)
    d = reduce(gcd, x, 0)
    if d == 0:
        raise PreconditionError("the zero class has no divisibility")
    return d, tuple(v // d for v in x)


def orthogonal_defect(lat: Lattice, c: Sequence[int], s: Sequence[int]) -> Fraction:
    """Square of the component of c orthogonal to s: c^2 - <c,s>^2 / s^2."""
    s2 = lat.square(s)
    if s2 == 0:
        raise PreconditionError("orthogonal_defect needs a class of nonzero square")
    return Fraction(lat.square(c)) - Fraction(lat.pair(c, s) ** 2, s2)
