"""The character sums J(lambda, mu) and minors of the order-m DFT matrix.

Two routes are provided.  ``j_weyl_sum`` evaluates the signed sum over the
symmetric group directly and is only meant as a cross-check.  The production
route is the determinant of the n x n minor of (zeta_m^{ab}) on the subsets
attached to lambda and mu; both give the same |J|^2.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cyclotomic import CycElt, det_exact, root_power
from .lattice import AlcovePoint, Weight, enumerate_alcove, killing_form, to_subset

WEYL_RANK_GUARD = 7


@dataclass(frozen=True)
class MinorIndex:
    """Row set A and column set B of a minor of the order-m DFT matrix."""

    m: int
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        A, B = tuple(sorted(self.A)), tuple(sorted(self.B))
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        if len(set(A)) != len(A) or len(set(B)) != len(B):
            raise ValueError("row/column sets must be duplicate-free")
        if len(A) != len(B):
            raise ValueError(f"|A| = {len(A)} but |B| = {len(B)}")
        if any(not 0 <= x < self.m for x in A + B):
            raise ValueError(f"indices must lie in [0, {self.m - 1}]")

    @classmethod
    def of(cls, m: int, A: Iterable[int], B: Iterable[int]) -> "MinorIndex":
        return cls(m, tuple(A), tuple(B))

    @property
    def n(self) -> int:
        return len(self.A)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def j_weyl_sum(lam, mu, kappa: int) -> complex:
    """Signed sum over w in S_n of exp(2 pi i (w(lam)|mu) / (n + kappa)).

    Terms are taken in lexicographic permutation order and combined with
    numpy's pairwise summation.
    """
    lam_c = lam.coords if isinstance(lam, (Weight, AlcovePoint)) else tuple(lam)
    mu_c = mu.coords if isinstance(mu, (Weight, AlcovePoint)) else tuple(mu)
    n = len(lam_c)
    if len(mu_c) != n:
        raise ValueError("rank mismatch")
    if n > WEYL_RANK_GUARD:
        raise ValueError(f"n = {n} exceeds the Weyl-sum guard {WEYL_RANK_GUARD}")
    m = n + kappa
    terms = []
    for perm in itertools.permutations(range(n)):
        # (w lam)_{perm[i]} = lam_i
        moved = [0] * n
        for i, target in enumerate(perm):
            moved[target] = lam_c[i]
        phase = killing_form(moved, mu_c) / m
        phase -= phase.numerator // phase.denominator
        angle = 2 * np.pi * float(phase)
        terms.append(_perm_sign(perm) * complex(np.cos(angle), np.sin(angle)))
    return complex(np.sum(np.array(terms, dtype=complex)))


def dft_minor_matrix(idx: MinorIndex) -> np.ndarray:
    exps = np.outer(idx.A, idx.B) % idx.m
    return np.exp(2j * np.pi * exps / idx.m)


def minor_det(idx: MinorIndex, mode: str = "exact"):
    """det(zeta_m^{ab}) over a in A, b in B (sorted order).

    ``mode="exact"`` returns a CycElt, ``mode="float"`` a complex via LU.
    """
    if mode == "exact":
        rows = [[root_power(idx.m, a * b) for b in idx.B] for a in idx.A]
        return det_exact(rows)
    if mode == "float":
        return complex(np.linalg.det(dft_minor_matrix(idx)))
    raise ValueError(f"unknown mode {mode!r}")


def minor_norm_sq_batch(m: int, rows: list[tuple[int, ...]], cols: tuple[int, ...]) -> np.ndarray:
    """|det|^2 for many row sets against one column set, in one LU batch."""
    if not rows:
        return np.zeros(0)
    exps = np.einsum("ka,b->kab", np.asarray(rows), np.asarray(cols)) % m
    dets = np.linalg.det(np.exp(2j * np.pi * exps / m))
    return np.abs(dets) ** 2


def _index_for(lam: AlcovePoint, mu: AlcovePoint) -> MinorIndex:
    if lam.n != mu.n or lam.kappa != mu.kappa:
        raise ValueError("lambda and mu must share n and kappa")
    return MinorIndex(lam.m, tuple(to_subset(lam)), tuple(to_subset(mu)))


def j_norm_sq(lam: AlcovePoint, mu: AlcovePoint, mode: str = "float"):
    """|J(lam, mu)|^2 computed as |Delta_{A,B}|^2.

    Float mode returns a float; exact mode returns Delta * conj(Delta) as a
    CycElt (a real cyclotomic integer, not necessarily rational).
    """
    idx = _index_for(lam, mu)
    if mode == "float":
        return abs(minor_det(idx, "float")) ** 2
    if mode == "exact":
        d = minor_det(idx, "exact")
        return d * d.conjugate()
    raise ValueError(f"unknown mode {mode!r}")


def delta_star_norm_sq(idx: MinorIndex) -> float:
    return abs(minor_det(idx, "float")) ** 2 / idx.m**idx.n


def delta_star_norm_sq_exact(idx: MinorIndex) -> tuple[CycElt, int]:
    """(|Delta|^2 as a CycElt, m^n): the normalized value is their ratio."""
    d = minor_det(idx, "exact")
    return d * d.conjugate(), idx.m**idx.n


@functools.lru_cache(maxsize=None)
def j_norm_sq_table(n: int, kappa: int) -> np.ndarray:
    """Matrix of |J(lam, mu)|^2 over the alcove, rows lam, columns mu.

    Ordering follows :func:`enumerate_alcove`.  The returned array is
    read-only since it is cached.
    """
    pts = enumerate_alcove(n, kappa)
    m = n + kappa
    subsets = [tuple(sorted(to_subset(p))) for p in pts]
    table = np.empty((len(pts), len(pts)))
    for j, cols in enumerate(subsets):
        table[:, j] = minor_norm_sq_batch(m, subsets, cols)
    table.setflags(write=False)
    return table

