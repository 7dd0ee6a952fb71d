"""Closed-form genus bounds and exact values for standard intersection forms.

Families:

* ``CP2``: the form <1>, class d times the generator.
* ``H``: the even form [[0, 1], [1, 0]], class (p, q).
* ``E``: the odd form <1> + <-1>, class (p, q).
* ``reduced``: <1> + n<-1>, class (p, q_1, ..., q_n) in reduced position.

Exact values are conditional on geometric hypotheses (spheres for the
basis classes, or a genuine rational surface); reports list them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .adjunction import BoundReport, Method
from .errors import PreconditionError


class Family(str, enum.Enum):
    CP2 = "CP2"
    H = "H"
    E = "E"
    REDUCED = "reduced"


class ExactFamily(str, enum.Enum):
    CP2 = "CP2"
    H_SPHERES = "H_spheres"
    E_SPHERES = "E_spheres"
    RATIONAL_SURFACE = "rational_surface"


@dataclass(frozen=True)
class ReducedForm:
    """Class (p, q_1, ..., q_n) with respect to <1> + n<-1>, q nonincreasing."""

    p: int
    qs: Tuple[int, ...]

    def __post_init__(self):
        qs = tuple(int(q) for q in self.qs)
        if self.p <= 0:
            raise ValueError("p must be positive")
        if any(q < 0 for q in qs) or any(a < b for a, b in zip(qs, qs[1:])):
            raise ValueError("qs must be nonnegative and nonincreasing")
        object.__setattr__(self, "qs", qs)

    @classmethod
    def from_class(cls, x: Sequence[int]) -> "ReducedForm":
        """Normalize signs and order of an arbitrary coefficient vector."""
        return cls(abs(x[0]), tuple(sorted((abs(q) for q in x[1:]), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.qs)

    @property
    def m(self) -> int:
        return sum(1 for q in self.qs if q)

    @property
    def square(self) -> int:
        return self.p * self.p - sum(q * q for q in self.qs)

    @property
    def canonical_pairing(self) -> int:
        """3p - sum(q_i), the pairing with the class (3, -1, ..., -1)."""
        return 3 * self.p - sum(self.qs)

    def as_class(self) -> Tuple[int, ...]:
        return (self.p,) + self.qs

    def is_exceptional(self) -> bool:
        """The classes (p, p - 1, 1) that may be represented by spheres."""
        nz = [q for q in self.qs if q]
        return len(nz) == 2 and self.p > 1 and nz == [self.p - 1, 1]


def is_reduced(rf: ReducedForm) -> bool:
    q = list(rf.qs[:3]) + [0] * (3 - min(3, rf.n))
    return rf.m <= 9 and rf.p >= q[0] + q[1] + q[2]


def _strict_report(value: int, **kw) -> BoundReport:
    """Report for ``genus > value``."""
    return BoundReport(max(0, value + 1), True, Method.CATALOG, raw=Fraction(value), **kw)


def closed_form_lb(family, **params) -> BoundReport:
    """Closed-form lower bound for a standard family.

    Parameters by family: ``CP2`` takes ``d``; ``H`` and ``E`` take ``p, q``;
    ``reduced`` takes ``p, qs`` and optionally ``d`` (default 1).
    """
    family = Family(family)
    try:
        if family is Family.CP2:
            d = abs(params["d"])
            value = (d - 1) * (d - 2) // 2
            return BoundReport(value, False, Method.CATALOG, raw=Fraction(value))
        if family is Family.H:
            p, q = abs(params["p"]), abs(params["q"])
            if p * q == 0:
                return BoundReport(0, False, Method.TRIVIAL, notes=("pq = 0",))
            value = (p - 1) * (q - 1)
            return BoundReport(value, False, Method.CATALOG, raw=Fraction(value))
        if family is Family.E:
            p, q = abs(params["p"]), abs(params["q"])
            if p * p - q * q <= 0:
                raise PreconditionError("E family needs positive square")
            num = p * p - q * q - 3 * p + q
            return _strict_report(num // 2)
        rf = ReducedForm(params["p"], tuple(params["qs"]))
        d = params.get("d", 1)
    except KeyError as exc:
        raise PreconditionError(f"{family.value} family needs parameter {exc.args[0]!r}") from None
    if not is_reduced(rf) or not 2 <= rf.m <= 9 or rf.square <= 0 or d < 1:
        raise PreconditionError("reduced family needs a reduced class with 2 <= m <= 9 and positive square")
    num = (d * rf.square - rf.canonical_pairing) * d
    assert num % 2 == 0
    notes = ()
    if d == 1 and rf.is_exceptional():
        notes = ("exceptional class (p, p-1, 1): genus 0 not excluded",)
    return _strict_report(num // 2, notes=notes)


def exact_genus(family, assume: bool = False, **params) -> Optional[BoundReport]:
    """Minimal genus under the family's geometric hypotheses.

    ``assume`` is the caller's assertion of those hypotheses; without it
    nothing is claimed and None is returned.
    """
    family = ExactFamily(family)
    if not assume:
        return None
    if family is ExactFamily.CP2:
        d = abs(params["d"])
        value = (d - 1) * (d - 2) // 2
        hyp = ("X is CP^2 (holomorphic curve attains the bound)",)
    elif family is ExactFamily.H_SPHERES:
        p, q = abs(params["p"]), abs(params["q"])
        value = (p - 1) * (q - 1) if p * q else 0
        hyp = ("basis classes represented by spheres meeting once",)
    elif family is ExactFamily.E_SPHERES:
        p, q = abs(params["p"]), abs(params["q"])
        if p > q:
            value = (p * p - q * q - 3 * p + q) // 2 + 1
        elif q > p:
            value = (q * q - p * p - 3 * q + p) // 2 + 1
        else:
            value = 0
        hyp = ("basis classes represented by disjoint spheres",)
    else:
        rf = ReducedForm(params["p"], tuple(params["qs"]))
        d = params.get("d", 1)
        if not is_reduced(rf) or rf.n > 9 or rf.square <= 0:
            return None
        num = (d * rf.square - rf.canonical_pairing) * d
        value = num // 2 + 1
        hyp = ("X is a rational surface CP^2 # n(-CP^2), n <= 9",)
    return BoundReport(max(0, value), False, Method.CATALOG, exact=True, raw=Fraction(value), hypotheses=hyp)


# -- finiteness of reduced classes of bounded genus ----------------------------


def reduced_search_region(n: int, g: int) -> Dict[int, int]:
    """Cutoff on q_1 for each m, for classes with bound value at most g.

    With E = xi^2 - (3p - sum q) the bound is E/2 + 1 <= g, so E <= 2g - 2.

    * m = 2: E + 2 >= 2 (q1 - 1)(q2 - 1), and for q2 = 1 (outside the
      exceptional family) E + 2 >= 2 q1; either way q1 <= g + 1.
    * 3 <= m <= 8: E is smallest at p = q1 + q2 + q3, where it is at least
      2 q1 (q2 + q3 - 1) + 2 (q2 q3 - q2 - q3) - 5 q3 (q3 - 1) >= 2 q1 - 2,
      so q1 <= E / 2 + 1.
    * m = 9: E >= (q1 - q_i)(q_i - 1/2) for the relevant i unless all q_i
      agree, which gives q1 <= 3E + 1 (and E >= 6 q1 - 2 in the equal case).

    For fixed q, E grows with p (p >= 2), so p needs no separate cutoff.
    """
    if not 2 <= n <= 9:
        raise PreconditionError("n must lie in [2, 9]")
    emax = 2 * g - 2
    region = {}
    for m in range(2, n + 1):
        if m == 2:
            region[m] = g + 1
        elif emax < 0:
            region[m] = 0  # E >= 0 whenever m >= 3
        elif m <= 8:
            region[m] = emax // 2 + 1
        else:
            region[m] = 3 * emax + 1
    return region


def _nonincreasing(m: int, top: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for q in range(1, top + 1):
        for rest in _nonincreasing(m - 1, q):
            yield (q,) + rest


def list_reduced_classes_with_genus_le(n: int, g: int) -> List[ReducedForm]:
    """All reduced classes in <1> + n<-1> (2 <= m) whose bound value is <= g.

    The exceptional family (p, p - 1, 1) is left out.  Results are sorted
    by (m, q, p).
    """
    emax = 2 * g - 2
    out = []
    for m, q1_max in reduced_search_region(n, g).items():
        for qs in _nonincreasing(m, q1_max):
            pad = qs + (0,) * (n - m)
            q3 = qs[2] if m >= 3 else 0
            p = max(qs[0] + qs[1] + q3, isqrt(sum(q * q for q in qs)) + 1, 2)
            while True:
                rf = ReducedForm(p, pad)
                e = rf.square - rf.canonical_pairing
                if e > emax:
                    break
                if not rf.is_exceptional():
                    out.append(rf)
                p += 1
    return out
