from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mingenus import (
    ConstructionPlan,
    PreconditionError,
    e_form_plan,
    genus_from_strict,
    h_form_plan,
    multiple_class_plan,
    multiple_class_upper_bound,
    primitive_bound_transfer,
    reduced_class_construction,
    reduced_class_plan,
    resolve_genus,
)


def test_upper_bound_formula():
    assert multiple_class_upper_bound(1, 0, 4) == 3
    assert multiple_class_upper_bound(2, 1, 3) == 3 + 6 - 2
    with pytest.raises(PreconditionError):
        multiple_class_upper_bound(0, 0, 2)


def test_plan_counts():
    p = h_form_plan(3, 2)
    assert (p.copies, p.points, resolve_genus(p)) == (5, 6, 2)
    p = multiple_class_plan(1, 0, 5)
    assert (p.copies, p.points, resolve_genus(p)) == (5, 10, 6)


def test_e_form_plan():
    # (5, 2) = 2 (1, 1) + 3 (1, 0): a cubic plus two fibres
    p = e_form_plan(5, 2)
    assert resolve_genus(p) == (25 - 4 - 15 + 2) // 2 + 1
    assert resolve_genus(e_form_plan(3, 0)) == 1
    with pytest.raises(PreconditionError):
        e_form_plan(2, 2)


def test_disconnected_plans_rejected():
    p = ConstructionPlan(((0, 2),), ((0,),))
    assert not p.connected
    with pytest.raises(PreconditionError):
        resolve_genus(p)
    q = ConstructionPlan(((0, 1), (1, 1)), ((0, 0), (0, 0)))
    assert not q.connected


def test_plan_validation():
    with pytest.raises(ValueError):
        ConstructionPlan(((0, 1), (0, 1)), ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        ConstructionPlan(((-1, 1),), ((0,),))
    with pytest.raises(ValueError):
        ConstructionPlan((), ())


def test_plan_dict_round_trip():
    p = h_form_plan(4, 3)
    assert ConstructionPlan.from_dict(p.to_dict()) == p


def test_reduced_construction():
    assert reduced_class_construction(5, (2, 2, 1)) == 4
    assert reduced_class_construction(10, (3, 3, 3)) == (100 - 27 - 30 + 9) // 2 + 1
    assert reduced_class_construction(4, (3, 3)) is None  # q's above 2 exceed p
    assert reduced_class_construction(1, (1,)) is None  # square 0
    assert reduced_class_construction(20, (1,) * 10) is None


def test_reduced_plan_matches_formula():
    for p, qs in [(10, (3, 3, 3)), (12, (4, 3)), (9, (3,)), (15, (5, 4, 3, 3))]:
        assert resolve_genus(reduced_class_plan(p, qs)) == reduced_class_construction(p, qs)
    with pytest.raises(PreconditionError):
        reduced_class_plan(5, (2, 2, 1))


def test_strict_conversion():
    assert primitive_bound_transfer(13, 2, 9) == Fraction(2)
    assert primitive_bound_transfer(12, 2, 9) == Fraction(3, 2)
    assert genus_from_strict(Fraction(3, 2)) == 2
    assert genus_from_strict(2) == 3
    assert genus_from_strict(-5) == 0
    with pytest.raises(PreconditionError):
        primitive_bound_transfer(1, 1, 0)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 3), st.integers(1, 3)), min_size=1, max_size=4),
    st.data(),
)
def test_resolve_is_permutation_invariant(comps, data):
    n = len(comps)
    upper = {(i, j): data.draw(st.integers(0, 3)) for i in range(n) for j in range(i, n)}
    inter = [[upper[min(i, j), max(i, j)] for j in range(n)] for i in range(n)]
    plan = ConstructionPlan(tuple(comps), tuple(map(tuple, inter)))
    perm = data.draw(st.permutations(range(n)))
    other = ConstructionPlan(
        tuple(comps[i] for i in perm), tuple(tuple(inter[i][j] for j in perm) for i in perm)
    )
    assert other.connected == plan.connected
    if plan.connected:
        assert resolve_genus(other) == resolve_genus(plan)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 5), st.integers(1, 6))
def test_parallel_copies_plan(d, g1, a):
    plan = multiple_class_plan(a, g1, d)
    assert resolve_genus(plan) == multiple_class_upper_bound(a, g1, d) == d * g1 + a * comb(d, 2) - (d - 1)
