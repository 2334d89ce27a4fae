import cmath
import itertools
import math

import numpy as np
import pytest

from oracles import dft_minor_norm_sq, weyl_norm_sq
from thetafactor.characters import (
    MinorIndex,
    delta_star_norm_sq,
    delta_star_norm_sq_exact,
    j_norm_sq,
    j_norm_sq_table,
    j_weyl_sum,
    minor_det,
)
from thetafactor.cyclotomic import CycElt, as_integer, root_power
from thetafactor.lattice import AlcovePoint, enumerate_alcove, rho, to_subset


def pt(coords, kappa):
    return AlcovePoint.from_coords(coords, kappa)


def test_minor_index_validation():
    assert MinorIndex(5, (3, 0), (1, 2)).A == (0, 3)
    with pytest.raises(ValueError):
        MinorIndex(3, (0, 0), (1, 2))
    with pytest.raises(ValueError):
        MinorIndex(3, (0,), (1, 2))
    with pytest.raises(ValueError):
        MinorIndex(3, (0, 3), (1, 2))


def test_weyl_sum_examples():
    for k in (1, 2, 5):
        assert j_weyl_sum((0,), (0,), k) == 1
    assert abs(abs(j_weyl_sum((1, 0), (1, 0), 1)) ** 2 - 3) < 1e-9
    assert abs(j_weyl_sum((2, 0), (2, 0), 2)) ** 2 < 1e-9


def test_weyl_sum_guard():
    with pytest.raises(ValueError):
        j_weyl_sum(tuple(range(7, -1, -1)), tuple(range(7, -1, -1)), 1)


def test_minor_det_examples():
    assert minor_det(MinorIndex(3, (0,), (0,))) == CycElt.one(3)
    assert minor_det(MinorIndex(3, (0, 1), (0, 1))) == root_power(3, 1) - 1
    d = minor_det(MinorIndex(4, (0, 1), (0, 2)))
    assert as_integer(d) == -2
    assert abs(abs(minor_det(MinorIndex(4, (0, 1), (0, 2)), "float")) ** 2 - 4) < 1e-12


def test_j_norm_sq_examples():
    assert abs(j_norm_sq(pt((1, 0), 1), pt((1, 0), 1)) - 3) < 1e-9
    assert abs(j_norm_sq(pt((1, 0), 2), pt((2, 0), 2)) - 4) < 1e-9
    assert as_integer(j_norm_sq(pt((1, 0), 2), pt((2, 0), 2), "exact")) == 4


@pytest.mark.parametrize("n,kappa", [(n, k) for n in range(1, 5) for k in range(1, 4)])
def test_vandermonde_at_rho(n, kappa):
    m = n + kappa
    r = AlcovePoint(rho(n), kappa)
    for mu in enumerate_alcove(n, kappa):
        c = mu.coords
        prod = 1.0
        for i, j in itertools.combinations(range(n), 2):
            prod *= abs(cmath.exp(2j * math.pi * c[j] / m) - cmath.exp(2j * math.pi * c[i] / m)) ** 2
        value = j_norm_sq(r, mu)
        assert value > 0
        assert abs(value - prod) <= 1e-9 * (1 + prod)


@pytest.mark.parametrize("n,kappa", [(n, k) for n in range(1, 5) for k in range(1, 5)])
def test_route_equivalence_and_symmetry(n, kappa):
    pts = enumerate_alcove(n, kappa)
    table = j_norm_sq_table(n, kappa)
    for i, lam in enumerate(pts):
        for j, mu in enumerate(pts):
            value = table[i, j]
            assert abs(abs(j_weyl_sum(lam, mu, kappa)) ** 2 - value) <= 1e-9 * (1 + value)
            assert abs(table[j, i] - value) <= 1e-9 * (1 + value)
    assert not table.flags.writeable


@pytest.mark.parametrize("n,kappa", [(2, 1), (2, 3), (3, 2), (3, 3), (4, 1)])
def test_against_brute_oracles(n, kappa):
    m = n + kappa
    pts = enumerate_alcove(n, kappa)
    for lam, mu in itertools.product(pts, repeat=2):
        ref = weyl_norm_sq(lam.coords, mu.coords, kappa)
        minor = dft_minor_norm_sq(m, sorted(to_subset(lam)), sorted(to_subset(mu)))
        assert abs(ref - minor) <= 1e-9 * (1 + ref)
        assert abs(j_norm_sq(lam, mu) - ref) <= 1e-9 * (1 + ref)


@pytest.mark.parametrize("n,kappa", [(2, 2), (3, 1), (3, 2), (2, 4)])
def test_exact_float_consistency(n, kappa):
    pts = enumerate_alcove(n, kappa)
    for lam, mu in itertools.product(pts, repeat=2):
        exact = j_norm_sq(lam, mu, "exact")
        assert exact == exact.conjugate()
        assert abs(exact.embed() - j_norm_sq(lam, mu)) < 1e-9


def test_delta_star_examples():
    assert abs(delta_star_norm_sq(MinorIndex(3, (0,), (0,))) - 1 / 3) < 1e-12
    assert abs(delta_star_norm_sq(MinorIndex(3, (0, 1), (0, 1))) - 1 / 3) < 1e-12
    total = sum(delta_star_norm_sq(MinorIndex(3, A, (0, 2))) for A in itertools.combinations(range(3), 2))
    assert abs(total - 1) < 1e-9


@pytest.mark.parametrize("m", range(1, 9))
def test_unitarity_exact_small(m):
    for n in range(1, min(m, 4) + 1):
        for B in itertools.combinations(range(m), n):
            total = CycElt.zero(m)
            for A in itertools.combinations(range(m), n):
                value, scale = delta_star_norm_sq_exact(MinorIndex(m, A, B))
                total = total + value
            assert total == CycElt.integer(m, scale)
            break  # one B per (m, n) keeps this quick; the float sweep covers all


def test_modes():
    with pytest.raises(ValueError):
        minor_det(MinorIndex(3, (0,), (0,)), "bogus")
    with pytest.raises(ValueError):
        j_norm_sq(pt((1, 0), 1), pt((1, 0), 2))
