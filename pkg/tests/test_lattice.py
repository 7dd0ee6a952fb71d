import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import b_plus_one_lattices, blocks_lattice, elementary_change, transform
from mingenus import (
    DimensionError,
    Lattice,
    LatticeError,
    NotUnimodularError,
    PreconditionError,
    Signature,
    characteristic_basepoint,
    divisibility,
    is_characteristic,
    orthogonal_defect,
    pairing,
    signature,
)


def test_pairing_examples(h_form):
    assert pairing(h_form, (1, 0), (0, 1)) == 1
    assert h_form.square((3, 2)) == 12
    assert Lattice.odd(1).square((2, 1)) == 3


def test_signature_examples(h_form):
    assert signature(h_form) == Signature(1, 1)
    assert signature(Lattice.diagonal(1, -1, -1, -1)) == (1, 3)
    assert Lattice.diagonal(1, -1, -1, -1).sigma == -2


def test_signature_zero_diagonal_blocks():
    # all diagonal entries vanish: needs the 2x2 pivot
    lat = blocks_lattice("HH")
    assert lat.signature == (2, 2)


def test_e8_signature():
    e8 = [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, -1],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, -1, 0, 0, 0, 0, 2],
    ]
    lat = Lattice(tuple(map(tuple, e8)))
    assert lat.signature == (8, 0)
    assert lat.is_even()
    assert characteristic_basepoint(lat) == (0,) * 8


def test_rejects_bad_grams():
    with pytest.raises(NotUnimodularError) as ei:
        Lattice(((2, 0), (0, 1)))
    assert ei.value.det == 2
    with pytest.raises(LatticeError):
        Lattice(((1, 1), (0, 1)))
    with pytest.raises(LatticeError):
        Lattice(((1, 0),))
    with pytest.raises(TypeError):
        Lattice(((1.0,),))


def test_dimension_mismatch(h_form):
    with pytest.raises(DimensionError):
        h_form.square((1, 2, 3))


def test_basepoints(h_form):
    assert characteristic_basepoint(h_form) == (0, 0)
    assert characteristic_basepoint(Lattice.odd(1)) == (1, 1)
    assert characteristic_basepoint(Lattice(((1,),))) == (1,)


def test_is_characteristic():
    e = Lattice.odd(1)
    assert is_characteristic(e, (3, -1))
    assert not is_characteristic(e, (2, 1))
    assert is_characteristic(Lattice.odd(9), (3,) + (1,) * 9)


def test_divisibility():
    assert divisibility((4, 6)) == (2, (2, 3))
    assert divisibility((0, -3)) == (3, (0, -1))
    with pytest.raises(PreconditionError):
        divisibility((0, 0))


def test_orthogonal_defect_example(h_form):
    # c = (4, 4), s = (1, 1): 32 - 64/2
    assert orthogonal_defect(h_form, (4, 4), (1, 1)) == 0
    with pytest.raises(PreconditionError):
        orthogonal_defect(h_form, (1, 1), (1, 0))


def test_reversed_and_sum(h_form):
    assert h_form.reversed().signature == (1, 1)
    lat = Lattice(((1,),)).direct_sum(Lattice.odd(2))
    assert lat.signature == (2, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from("+-H"), min_size=1, max_size=4), st.integers(0, 10**6))
def test_signature_is_a_congruence_invariant(shape, seed):
    base = blocks_lattice(shape)
    u, _ = elementary_change(base.rank, random.Random(seed), steps=5)
    lat = transform(base, u)
    assert lat.signature == base.signature


@settings(max_examples=60, deadline=None)
@given(b_plus_one_lattices(), st.data())
def test_characteristic_coset_is_stable_under_2_lattice(lu, data):
    lat, _, _ = lu
    w = characteristic_basepoint(lat)
    assert is_characteristic(lat, w)
    v = data.draw(st.lists(st.integers(-5, 5), min_size=lat.rank, max_size=lat.rank))
    assert is_characteristic(lat, [a + 2 * b for a, b in zip(w, v)])
    # adding a single basis vector changes the class mod 2, so it is never characteristic
    e = [0] * lat.rank
    e[data.draw(st.integers(0, lat.rank - 1))] = 1
    assert not is_characteristic(lat, [a + b for a, b in zip(w, e)])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5).filter(any), st.integers(1, 9))
def test_divisibility_scales(x, k):
    d, xi = divisibility(x)
    assert divisibility([k * v for v in x]) == (k * d, xi)
    assert tuple(d * v for v in xi) == tuple(x)


@settings(max_examples=60, deadline=None)
@given(b_plus_one_lattices(), st.data())
def test_orthogonal_defect_nonpositive(lu, data):
    lat, _, _ = lu
    from conftest import positive_classes

    s = data.draw(positive_classes(lat))
    c = data.draw(st.lists(st.integers(-9, 9), min_size=lat.rank, max_size=lat.rank))
    dft = orthogonal_defect(lat, c, s)
    assert isinstance(dft, Fraction)
    assert dft <= 0
