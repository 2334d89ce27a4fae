"""Weight lattice of sl_n.

A weight is stored as an integer n-vector modulo the all-ones vector.  The
canonical representative has its last coordinate equal to zero.  Points of the
shifted alcove rho + P_kappa are weights with strictly decreasing coordinates
and first coordinate at most m - 1, where m = n + kappa; they correspond to
n-element subsets of {0, ..., m-1} containing 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True, order=True)
class Weight:
    """An sl_n weight in canonical form (``coords[-1] == 0``)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("a weight needs at least one coordinate")
        if self.coords[-1] != 0:
            raise ValueError(
                f"coords {self.coords} are not canonical; use Weight.canonical()"
            )

    @classmethod
    def canonical(cls, coords: Iterable[int]) -> "Weight":
        """Reduce an arbitrary representative to last-coordinate-zero form."""
        coords = tuple(int(c) for c in coords)
        if not coords:
            raise ValueError("a weight needs at least one coordinate")
        shift = coords[-1]
        return cls(tuple(c - shift for c in coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True, order=True)
class AlcovePoint:
    """An element of rho + P_kappa."""

    weight: Weight
    kappa: int

    def __post_init__(self):
        c = self.weight.coords
        if self.kappa < 1:
            raise ValueError("level kappa must be >= 1")
        if any(c[i] <= c[i + 1] for i in range(len(c) - 1)):
            raise ValueError(f"{c} is not strictly decreasing")
        if c[0] > self.kappa + len(c) - 1:
            raise ValueError(f"{c} lies outside the level-{self.kappa} alcove")

    @classmethod
    def from_coords(cls, coords: Iterable[int], kappa: int) -> "AlcovePoint":
        return cls(Weight(tuple(coords)), kappa)

    @property
    def n(self) -> int:
        return self.weight.n

    @property
    def m(self) -> int:
        return self.weight.n + self.kappa

    @property
    def coords(self) -> tuple[int, ...]:
        return self.weight.coords


def _as_coords(w) -> tuple[int, ...]:
    if isinstance(w, AlcovePoint):
        return w.coords
    if isinstance(w, Weight):
        return w.coords
    return tuple(w)


def killing_form(lhs, rhs) -> Fraction:
    """Normalized form with (e_i|e_j) = delta_ij - 1/n.

    Accepts Weights, AlcovePoints or plain integer sequences; the value does
    not depend on the chosen representatives.
    """
    x, y = _as_coords(lhs), _as_coords(rhs)
    if len(x) != len(y):
        raise ValueError(f"rank mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    dot = sum(a * b for a, b in zip(x, y))
    return dot - Fraction(sum(x) * sum(y), n)


def rho(n: int) -> Weight:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Weight(tuple(range(n - 1, -1, -1)))


def theta(n: int) -> Weight:
    """Highest root e_1 - e_n (equal to zero when n == 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Weight((0,))
    return Weight.canonical((1,) + (0,) * (n - 2) + (-1,))


def dual(w):
    """lambda* = -w_0 lambda, where w_0 reverses the coordinates.

    Returns the same kind of object it was given; the alcove is preserved.
    """
    c = _as_coords(w)
    out = Weight.canonical(-x for x in reversed(c))
    if isinstance(w, AlcovePoint):
        return AlcovePoint(out, w.kappa)
    return out


def enumerate_alcove(n: int, kappa: int) -> list[AlcovePoint]:
    """All points of rho + P_kappa, lexicographically increasing in coords."""
    if n < 1 or kappa < 1:
        raise ValueError("need n >= 1 and kappa >= 1")
    m = n + kappa
    points = [
        tuple(sorted(rest, reverse=True)) + (0,)
        for rest in itertools.combinations(range(1, m), n - 1)
    ]
    points.sort()
    return [AlcovePoint(Weight(c), kappa) for c in points]


def to_subset(p: AlcovePoint) -> frozenset[int]:
    return frozenset(p.coords)


def from_subset(subset: Iterable[int], kappa: int) -> AlcovePoint:
    """Inverse of :func:`to_subset`; the subset must contain 0."""
    s = sorted(set(subset), reverse=True)
    if not s or s[-1] != 0:
        raise ValueError("subset must contain 0")
    return AlcovePoint(Weight(tuple(s)), kappa)


def gamma(p: AlcovePoint) -> int:
    """kappa + n - 1 - lambda_1, i.e. (m - 1) - max of the subset."""
    return p.kappa + p.n - 1 - p.coords[0]
