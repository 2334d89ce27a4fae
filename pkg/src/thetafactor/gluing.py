"""Exact linear-algebra model of the gluing argument.

The space V_{n,n} is a direct sum of summands W_x, one for each label x of
A(Delta^kappa), with prescribed dimensions.  For each p < n an invertible map
beta_p : V_{p,n} -> V_{n,p} is given; the only properties assumed are that it
is invertible and carries V'_{p,n} onto V'_{n,p}.  The glued subspace H is

    { theta in V_{n,n} : beta_p sigma_{p,n} theta = sigma_{n,p} theta  for all p < n }

and the projection of H to V'_{n,n} is an isomorphism.  This module builds H,
the inverse map (``reconstruct``), and the checks.  All arithmetic is over
Fraction / QQ; there are no floats here.

Coordinates: V_{n,n} is flattened with labels ordered by (flag level, a),
where the flag level of x is the i with x in A'_{i,q}.  Every V_{p,q} inherits
that order, which is the ordering by the partition A_{p,q} = U_i A'_{i,q}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .indexsets import LabelPair, enumerate_A_delta, flag_level, in_A_pq
from .verlinde import pb_dims


class IncompatibleDimensionsError(ValueError):
    """Summand dimensions for which no beta with the required shape exists."""


def _to_qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _dm(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    return DomainMatrix([[_to_qq(v) for v in r] for r in rows], (len(rows), ncols), QQ)


def _rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows or not ncols:
        return 0
    return _dm(rows, ncols).rank()


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    size = len(rhs)
    if size == 0:
        return []
    A = _dm(matrix, size)
    b = _dm([[v] for v in rhs], 1)
    x = A.lu_solve(b)
    return [_from_qq(x.to_list()[i][0]) for i in range(size)]


class GradedSpace:
    """V_{n,n} = sum of W_x over A(Delta^kappa), with block bookkeeping."""

    def __init__(self, n: int, kappa: int, dims: Mapping[LabelPair, int]):
        self.n = n
        self.kappa = kappa
        labels = enumerate_A_delta(n, kappa)
        missing = [x for x in labels if x not in dims]
        if missing:
            raise ValueError(f"no dimension given for {missing[0]}")
        if any(int(dims[x]) < 0 for x in labels):
            raise ValueError("summand dimensions must be nonnegative")
        self.labels = tuple(sorted(labels, key=lambda x: (flag_level(x, kappa), x.a)))
        self.dims = {x: int(dims[x]) for x in self.labels}
        self.offsets = {}
        pos = 0
        for x in self.labels:
            self.offsets[x] = pos
            pos += self.dims[x]
        self.total = pos

    def _check(self, p: int, q: int):
        n = self.n
        if not (0 <= p <= n and 0 <= q <= n and p + q >= n):
            raise ValueError(f"invalid (p, q) = ({p}, {q}) for n = {n}")

    def block(self, p: int, q: int, primed: bool = False) -> list[LabelPair]:
        """Labels of A_{p,q} (or A'_{p,q}) in coordinate order."""
        self._check(p, q)
        return [x for x in self.labels if in_A_pq(x, self.kappa, p, q, primed)]

    def coords(self, labels: Iterable[LabelPair]) -> list[int]:
        out = []
        for x in labels:
            start = self.offsets[x]
            out.extend(range(start, start + self.dims[x]))
        return out

    def block_coords(self, p: int, q: int, primed: bool = False) -> list[int]:
        return self.coords(self.block(p, q, primed))

    def dim(self, p: int, q: int, primed: bool = False) -> int:
        return sum(self.dims[x] for x in self.block(p, q, primed))

    def check_compatible(self):
        """Dimensions of V_{p,n}, V_{n,p} and of their primed parts must agree."""
        for p in range(self.n + 1):
            for primed in (False, True):
                left, right = self.dim(p, self.n, primed), self.dim(self.n, p, primed)
                if left != right:
                    tag = "V'" if primed else "V"
                    raise IncompatibleDimensionsError(
                        f"dim {tag}_{{{p},{self.n}}} = {left} but dim {tag}_{{{self.n},{p}}} = {right}"
                    )


def unit_dims(n: int, kappa: int) -> dict[LabelPair, int]:
    return {x: 1 for x in enumerate_A_delta(n, kappa)}


def verlinde_dims(n: int, kappa: int, g: int) -> dict[LabelPair, int]:
    return pb_dims(n, kappa, g)


def build_graded_space(n: int, kappa: int, dims) -> GradedSpace:
    """``dims`` is a mapping over A(Delta^kappa), ``"unit"``, or ``("verlinde", g)``."""
    if isinstance(dims, str):
        if dims not in ("unit", "ones"):
            raise ValueError(f"unknown dimension source {dims!r}")
        dims = unit_dims(n, kappa)
    elif isinstance(dims, tuple) and dims and dims[0] == "verlinde":
        dims = verlinde_dims(n, kappa, dims[1])
    space = GradedSpace(n, kappa, dims)
    space.check_compatible()
    return space


class SectionVector:
    """An element of V_{n,n}, stored as a flat tuple of Fractions."""

    __slots__ = ("space", "values")

    def __init__(self, space: GradedSpace, values: Iterable = None):
        self.space = space
        vals = tuple(Fraction(v) for v in values) if values is not None else (Fraction(0),) * space.total
        if len(vals) != space.total:
            raise ValueError(f"expected {space.total} coordinates, got {len(vals)}")
        self.values = vals

    @classmethod
    def from_components(cls, space: GradedSpace, components: Mapping[LabelPair, Sequence]) -> "SectionVector":
        vals = [Fraction(0)] * space.total
        for x, comp in components.items():
            if len(comp) != space.dims[x]:
                raise ValueError(f"component {x} has length {len(comp)}, expected {space.dims[x]}")
            start = space.offsets[x]
            vals[start:start + len(comp)] = [Fraction(v) for v in comp]
        return cls(space, vals)

    @property
    def components(self) -> dict[LabelPair, tuple[Fraction, ...]]:
        sp = self.space
        return {x: self.values[sp.offsets[x]:sp.offsets[x] + sp.dims[x]] for x in sp.labels}

    def support(self) -> set[LabelPair]:
        return {x for x, c in self.components.items() if any(c)}

    def _keep(self, coords: Iterable[int]) -> "SectionVector":
        keep = set(coords)
        return SectionVector(self.space, [v if i in keep else 0 for i, v in enumerate(self.values)])

    def __add__(self, other: "SectionVector") -> "SectionVector":
        return SectionVector(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "SectionVector") -> "SectionVector":
        return SectionVector(self.space, [a - b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        if not isinstance(other, SectionVector):
            return NotImplemented
        return self.space is other.space and self.values == other.values

    def __bool__(self):
        return any(self.values)

    def __repr__(self):
        return f"SectionVector({[str(v) for v in self.values]})"


def project_sigma(theta: SectionVector, p: int, q: int) -> SectionVector:
    """Projection onto V_{p,q}: zero every component outside A_{p,q}."""
    return theta._keep(theta.space.block_coords(p, q))


def project_tau(theta: SectionVector, p: int, q: int) -> SectionVector:
    """Projection between primed spaces, onto V'_{p,q}."""
    return theta._keep(theta.space.block_coords(p, q, primed=True))


def project_pi(theta: SectionVector, p: int, q: int) -> SectionVector:
    """V_{p,q} -> V'_{p,q}.  The input must be supported on A_{p,q}."""
    allowed = set(theta.space.block(p, q))
    if not theta.support() <= allowed:
        raise ValueError(f"pi_{{{p},{q}}} applied to a vector outside V_{{{p},{q}}}")
    return theta._keep(theta.space.block_coords(p, q, primed=True))


@dataclass(frozen=True)
class BetaMap:
    """beta_p : V_{p,n} -> V_{n,p} as a matrix on global coordinates.

    ``cols`` lists V'_{p,n} first, then the rest of V_{p,n}; ``rows`` lists
    V'_{n,p} first, then the rest of V_{n,p}.
    """

    p: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    n_primed: int

    def apply(self, theta: SectionVector) -> SectionVector:
        """beta_p sigma_{p,n} theta, as an element of V_{n,p} inside V_{n,n}."""
        x = [theta.values[c] for c in self.cols]
        out = [Fraction(0)] * theta.space.total
        for r, row in zip(self.rows, self.matrix):
            out[r] = sum((a * b for a, b in zip(row, x) if a and b), Fraction(0))
        return SectionVector(theta.space, out)


@dataclass(frozen=True)
class GluingProblem:
    space: GradedSpace
    betas: tuple[BetaMap, ...]
    seed: int

    def beta(self, p: int) -> BetaMap:
        return self.betas[p]


def _unimodular(size: int, rng: np.random.Generator) -> list[list[int]]:
    """Product of elementary matrices with multipliers in [-3, 3] and row signs."""
    mat = [[int(i == j) for j in range(size)] for i in range(size)]
    if size > 1:
        for _ in range(2 * size):
            i, j = rng.choice(size, size=2, replace=False)
            c = int(rng.choice([-3, -2, -1, 1, 2, 3]))
            mat[i] = [a + c * b for a, b in zip(mat[i], mat[j])]
    for i in range(size):
        if rng.integers(2):
            mat[i] = [-a for a in mat[i]]
    return mat


def random_betas(space: GradedSpace, seed: int = 0) -> GluingProblem:
    """Random block-triangular betas, deterministic in ``seed``."""
    space.check_compatible()
    rng = np.random.default_rng(seed)
    n = space.n
    betas = []
    for p in range(n):
        dom_primed = space.block_coords(p, n, primed=True)
        dom_rest = space.block_coords(p - 1, n) if p >= 1 else []
        cod_primed = space.block_coords(n, p, primed=True)
        cod_rest = [c for c in space.block_coords(n, p) if c not in set(cod_primed)]
        k, r = len(dom_primed), len(dom_rest)
        top_left = _unimodular(k, rng)
        bottom_right = _unimodular(r, rng)
        top_right = rng.integers(-3, 4, size=(k, r)).tolist() if k and r else [[] for _ in range(k)]
        rows = [top_left[i] + [int(v) for v in top_right[i]] for i in range(k)]
        rows += [[0] * k + bottom_right[i] for i in range(r)]
        betas.append(BetaMap(
            p,
            tuple(cod_primed + cod_rest),
            tuple(dom_primed + dom_rest),
            tuple(tuple(Fraction(v) for v in row) for row in rows),
            k,
        ))
    return GluingProblem(space, tuple(betas), seed)


def validate_problem(problem: GluingProblem) -> None:
    """Check by exact elimination that each beta is invertible and maps V' onto V'."""
    space = problem.space
    n = space.n
    for p, beta in enumerate(problem.betas):
        if set(beta.cols) != set(space.block_coords(p, n)) or set(beta.rows) != set(space.block_coords(n, p)):
            raise AssertionError(f"beta_{p} has the wrong domain or codomain")
        size = len(beta.rows)
        if len(beta.cols) != size or _rank(beta.matrix, size) != size:
            raise AssertionError(f"beta_{p} is not invertible")
        dom_primed = set(space.block_coords(p, n, primed=True))
        cod_primed = set(space.block_coords(n, p, primed=True))
        primed_cols = [j for j, c in enumerate(beta.cols) if c in dom_primed]
        primed_rows = [i for i, r in enumerate(beta.rows) if r in cod_primed]
        for i, r in enumerate(beta.rows):
            if r not in cod_primed and any(beta.matrix[i][j] for j in primed_cols):
                raise AssertionError(f"beta_{p} sends V'_{{{p},{n}}} outside V'_{{{n},{p}}}")
        block = [[beta.matrix[i][j] for j in primed_cols] for i in primed_rows]
        if len(primed_cols) != len(primed_rows) or _rank(block, len(primed_cols)) != len(primed_cols):
            raise AssertionError(f"beta_{p} does not map V'_{{{p},{n}}} onto V'_{{{n},{p}}}")


def _constraint_rows(problem: GluingProblem) -> list[list[Fraction]]:
    """Rows of the stacked map theta -> beta_p sigma_{p,n} theta - sigma_{n,p} theta."""
    total = problem.space.total
    rows = []
    for beta in problem.betas:
        for r, row in zip(beta.rows, beta.matrix):
            full = [Fraction(0)] * total
            for c, v in zip(beta.cols, row):
                full[c] += v
            full[r] -= 1
            rows.append(full)
    return rows


def glued_subspace_dim(problem: GluingProblem) -> int:
    total = problem.space.total
    return total - _rank(_constraint_rows(problem), total)


def projection_is_injective(problem: GluingProblem) -> bool:
    """H meets the kernel of pi_{n,n} only in 0."""
    space = problem.space
    total = space.total
    rows = _constraint_rows(problem)
    for c in space.block_coords(space.n, space.n, primed=True):
        rows.append([Fraction(int(i == c)) for i in range(total)])
    return _rank(rows, total) == total


def check_section(theta: SectionVector, problem: GluingProblem) -> bool:
    """True iff beta_p sigma_{p,n} theta == sigma_{n,p} theta for every p < n."""
    n = problem.space.n
    return all(
        beta.apply(theta) == project_sigma(theta, n, beta.p) for beta in problem.betas
    )


def reconstruct(theta_prime: SectionVector, problem: GluingProblem) -> SectionVector:
    """The element theta of H with pi_{n,n} theta = theta_prime.

    theta'_p in V'_{p,n} is defined by
    beta_p theta'_p = tau_{n,p} theta' - sum_{q<p} pi_{n,p} beta_p theta'_q,
    and theta is the sum of all theta'_p.
    """
    space = problem.space
    n = space.n
    if not theta_prime.support() <= set(space.block(n, n, primed=True)):
        raise ValueError("theta' must lie in V'_{n,n}")
    pieces: list[SectionVector] = []
    for p in range(n + 1):
        rhs = project_tau(theta_prime, n, p)
        if p == n:
            for prev in pieces:
                rhs = rhs - project_pi(prev, n, n)
            pieces.append(rhs)
            break
        beta = problem.beta(p)
        for prev in pieces:
            rhs = rhs - project_pi(beta.apply(prev), n, p)
        k = beta.n_primed
        block = [list(row[:k]) for row in beta.matrix[:k]]
        solution = _solve(block, [rhs.values[r] for r in beta.rows[:k]])
        # the other rows of beta vanish on V'_{p,n}, so rhs must vanish there too
        assert not any(rhs.values[r] for r in beta.rows[k:]), "right-hand side left V'"
        vals = [Fraction(0)] * space.total
        for c, v in zip(beta.cols[:k], solution):
            vals[c] = v
        pieces.append(SectionVector(space, vals))
    theta = SectionVector(space)
    for piece in pieces:
        theta = theta + piece
    return theta


def random_section(space: GradedSpace, seed: int, primed_only: bool = True) -> SectionVector:
    """Random vector in V'_{n,n} (or all of V_{n,n}) with nonzero entries in [-5, 5]."""
    rng = np.random.default_rng(seed)
    coords = space.block_coords(space.n, space.n, primed=primed_only)
    vals = [Fraction(0)] * space.total
    for c in coords:
        vals[c] = Fraction(int(rng.integers(1, 6)) * int(rng.choice([-1, 1])))
    return SectionVector(space, vals)


def verify_gluing(n: int, kappa: int, dims="unit", seed: int = 0):
    """Build a random problem and check the three exact properties.

    Passes iff dim H == dim V'_{n,n}, pi_{n,n} reconstruct(theta') == theta'
    and reconstruct(theta') lies in H, for a random theta' drawn from ``seed``.
    """
    from .factorization import IdentityReport

    space = build_graded_space(n, kappa, dims)
    problem = random_betas(space, seed)
    validate_problem(problem)
    target = space.dim(n, n, primed=True)
    glued = glued_subspace_dim(problem)
    theta_prime = random_section(space, seed + 10_000)
    theta = reconstruct(theta_prime, problem)
    right_inverse = project_pi(theta, n, n) == theta_prime
    in_h = check_section(theta, problem)
    injective = projection_is_injective(problem)
    passed = glued == target and right_inverse and in_h
    label = dims if isinstance(dims, str) else ("verlinde" if isinstance(dims, tuple) else "custom")
    params = {"n": n, "kappa": kappa, "dims": label, "seed": seed}
    if isinstance(dims, tuple):
        params["dims_genus"] = dims[1]
    return IdentityReport(
        "gluing", params, glued, target, passed, float(abs(glued - target)), "exact",
        {"right_inverse": right_inverse, "reconstruct_in_H": in_h, "injective": injective,
         "total_dim": space.total},
    )
