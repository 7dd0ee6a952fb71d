import itertools
import random
import sys

import pytest
from hypothesis import strategies as st

from mingenus import Lattice

CP2 = Lattice(((1,),))
H = Lattice.hyperbolic()
E = Lattice.odd(1)


def blocks_lattice(blocks):
    """Direct sum of blocks, each "+", "-" (rank one) or "H"."""
    lat = None
    for b in blocks:
        piece = {"+": Lattice(((1,),)), "-": Lattice(((-1,),)), "H": H}[b]
        lat = piece if lat is None else lat.direct_sum(piece)
    return lat


def elementary_change(n, rng, steps=3, size=2):
    """Random unimodular U and its inverse, as products of elementary matrices."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    uinv = [row[:] for row in u]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        f = rng.randint(-size, size)
        # U <- U (I + f e_ij): column j += f column i
        for row in u:
            row[j] += f * row[i]
        # U^-1 <- (I - f e_ij) U^-1: row i -= f row j
        uinv[i] = [a - f * b for a, b in zip(uinv[i], uinv[j])]
    return u, uinv


def transform(lat, u):
    """The Gram matrix U^T G U."""
    g = lat.gram
    n = lat.rank
    gu = [[sum(g[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return Lattice(tuple(tuple(sum(u[k][i] * gu[k][j] for k in range(n)) for j in range(n)) for i in range(n)))


def apply(m, x):
    return tuple(sum(a * b for a, b in zip(row, x)) for row in m)


B_PLUS_ONE_SHAPES = [("+",), ("+", "-"), ("+", "-", "-"), ("H",), ("H", "-"), ("-", "+"), ("-", "H")]


@st.composite
def b_plus_one_lattices(draw, max_rank=3, change=True):
    """(lattice, U, U^-1) with b+ = 1; U maps new coordinates to block coordinates."""
    shapes = [s for s in B_PLUS_ONE_SHAPES if len(s) + (1 if "H" in s else 0) <= max_rank]
    shape = draw(st.sampled_from(shapes))
    base = blocks_lattice(shape)
    seed = draw(st.integers(0, 2**32 - 1))
    if not change:
        n = base.rank
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        return base, ident, ident
    u, uinv = elementary_change(base.rank, random.Random(seed))
    return transform(base, u), u, uinv


@st.composite
def positive_classes(draw, lat, bound=4):
    x = draw(
        st.lists(st.integers(-bound, bound), min_size=lat.rank, max_size=lat.rank).filter(
            lambda v: lat.square(v) > 0
        )
    )
    return tuple(x)


def box_vectors(n, box):
    return itertools.product(range(-box, box + 1), repeat=n)


@pytest.fixture
def cp2():
    return CP2


@pytest.fixture
def h_form():
    return H


@pytest.fixture
def e_form():
    return E


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
