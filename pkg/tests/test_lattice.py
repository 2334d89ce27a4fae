from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import brute_alcove
from thetafactor.lattice import (
    AlcovePoint,
    Weight,
    dual,
    enumerate_alcove,
    from_subset,
    gamma,
    killing_form,
    rho,
    theta,
    to_subset,
)
from math import comb

vectors = st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(-6, 6), min_size=n, max_size=n))


def test_killing_form_examples():
    assert killing_form((1, 0), (1, 0)) == Fraction(1, 2)
    assert killing_form((0, 0, 0), (4, -1, 2)) == 0
    assert killing_form(rho(3), theta(3)) == 2
    assert theta(3) == Weight((2, 1, 0))


def test_killing_form_rank_mismatch():
    with pytest.raises(ValueError):
        killing_form((1, 0), (1, 0, 0))


@given(vectors, st.integers(-5, 5), st.integers(-5, 5), st.data())
def test_killing_form_shift_invariant(x, s, t, data):
    y = data.draw(st.lists(st.integers(-6, 6), min_size=len(x), max_size=len(x)))
    assert killing_form([v + s for v in x], [v + t for v in y]) == killing_form(x, y)


@given(vectors)
def test_killing_form_positive(x):
    w = Weight.canonical(x)
    value = killing_form(w, w)
    assert value >= 0
    assert (value == 0) == all(c == 0 for c in w.coords)


def test_rho():
    assert rho(1).coords == (0,)
    assert rho(2).coords == (1, 0)
    assert rho(4).coords == (3, 2, 1, 0)


def test_weight_canonical():
    assert Weight.canonical((5, 3, 2)).coords == (3, 1, 0)
    with pytest.raises(ValueError):
        Weight((1, 1))


def test_dual_examples():
    assert dual(Weight((0, 0))) == Weight((0, 0))
    assert dual(Weight((3, 1, 0))) == Weight((3, 2, 0))
    for k in range(1, 5):
        assert dual(Weight((k, 0))) == Weight((k, 0))


@given(vectors)
def test_dual_involution(x):
    w = Weight.canonical(x)
    assert dual(dual(w)) == w


@pytest.mark.parametrize("n,kappa", [(n, k) for n in range(1, 5) for k in range(1, 5)])
def test_alcove_matches_filter(n, kappa):
    pts = enumerate_alcove(n, kappa)
    assert [p.coords for p in pts] == brute_alcove(n, kappa)
    assert len(pts) == comb(n + kappa - 1, n - 1)
    subsets = [to_subset(p) for p in pts]
    assert len(set(subsets)) == len(pts)
    m = n + kappa
    assert all(0 in s and len(s) == n and max(s) < m for s in subsets)
    assert {from_subset(s, kappa) for s in subsets} == set(pts)
    assert {dual(p) for p in pts} == set(pts)


def test_alcove_examples():
    assert [p.coords for p in enumerate_alcove(1, 3)] == [(0,)]
    assert [p.coords for p in enumerate_alcove(2, 1)] == [(1, 0), (2, 0)]
    assert [p.coords for p in enumerate_alcove(2, 2)] == [(1, 0), (2, 0), (3, 0)]


def test_to_subset_examples():
    assert to_subset(AlcovePoint.from_coords((1, 0), 1)) == {0, 1}
    assert to_subset(AlcovePoint.from_coords((2, 0), 1)) == {0, 2}
    assert to_subset(AlcovePoint.from_coords((3, 1, 0), 1)) == {0, 1, 3}


def test_gamma_examples():
    for n in range(1, 5):
        for k in range(1, 4):
            assert gamma(AlcovePoint(rho(n), k)) == k
    assert gamma(AlcovePoint.from_coords((2, 0), 1)) == 0
    assert gamma(AlcovePoint.from_coords((2, 0), 2)) == 1


def test_alcove_point_validation():
    with pytest.raises(ValueError):
        AlcovePoint.from_coords((1, 1, 0), 2)
    with pytest.raises(ValueError):
        AlcovePoint.from_coords((3, 0), 1)
    with pytest.raises(ValueError):
        from_subset({1, 2}, 1)
