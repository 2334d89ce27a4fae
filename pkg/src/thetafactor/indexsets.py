"""Label sets (a, b) indexing the summands Theta_PB(a, b).

Indexing conventions: the vectors ``a`` and ``b`` are 1-indexed in the
formulas (a_1 .. a_n), stored as 0-indexed tuples.  The exponents m_i, l_i and
the stratum sets I, J are 0-indexed in the formulas and stored that way too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class UnboundedIndexSetError(ValueError):
    """The constraints do not bound the label set, so it cannot be listed."""


@dataclass(frozen=True, order=True)
class LabelPair:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have the same length")

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_a(cls, a: Iterable[int], kappa: int) -> "LabelPair":
        """Pair with b_i = kappa - a_{n-i+1}."""
        a = tuple(a)
        return cls(a, tuple(kappa - x for x in reversed(a)))


@dataclass(frozen=True)
class BundleExponents:
    """Exponents (m_0..m_{n-1}, l_0..l_{n-1}, e, d) of a line bundle on KGL."""

    n: int
    m_exp: tuple[int, ...]
    l_exp: tuple[int, ...]
    e: int = 0
    d: int = 0

    def __post_init__(self):
        object.__setattr__(self, "m_exp", tuple(self.m_exp))
        object.__setattr__(self, "l_exp", tuple(self.l_exp))
        if len(self.m_exp) != self.n or len(self.l_exp) != self.n:
            raise ValueError("m_exp and l_exp must have length n")

    @classmethod
    def delta(cls, n: int, kappa: int) -> "BundleExponents":
        """The presentation of Delta^kappa: m_i = kappa (n - i), l_i = 0, e = 0, d = kappa."""
        return cls(n, tuple(kappa * (n - i) for i in range(n)), (0,) * n, 0, kappa)


@dataclass(frozen=True)
class StratumIndex:
    """Subsets I, J of [0, n-1].  ``admissible`` is the condition min I + min J >= n."""

    n: int
    I: frozenset[int] = frozenset()
    J: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "I", frozenset(self.I))
        object.__setattr__(self, "J", frozenset(self.J))
        for s in (self.I, self.J):
            if any(not 0 <= x < self.n for x in s):
                raise ValueError(f"stratum indices must lie in [0, {self.n - 1}]")

    @property
    def i1(self) -> int:
        return min(self.I, default=self.n)

    @property
    def j1(self) -> int:
        return min(self.J, default=self.n)

    @property
    def admissible(self) -> bool:
        return self.i1 + self.j1 >= self.n

    def require_admissible(self):
        if not self.admissible:
            raise ValueError(
                f"stratum I={sorted(self.I)}, J={sorted(self.J)} violates min I + min J >= n"
            )


def _ascending(length: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations_with_replacement(range(lo, hi + 1), length)


def _coordinate_bounds(L: BundleExponents, s: StratumIndex) -> tuple[int, int]:
    """Bounds lo <= a_1 - e and a_n - e <= hi derived from conditions (2), (3)."""
    n = L.n
    i1, j1 = s.i1, s.j1
    # condition (2) at i = n-1 reads a_n - e <= m_{n-1}; (3) at i = n-1 reads a_1 - e >= -l_{n-1}
    hi = L.m_exp[n - 1] if n - j1 <= n - 1 else None
    lo = -L.l_exp[n - 1] if n - i1 <= n - 1 else None
    if hi is not None and lo is None and 0 in s.I:
        # full sum pinned to m_0 and every term <= hi
        lo = L.m_exp[0] - (n - 1) * hi
    if lo is not None and hi is None and 0 in s.J:
        # full sum pinned to -l_0 and every term >= lo
        hi = -L.l_exp[0] - (n - 1) * lo
    if lo is None or hi is None:
        raise UnboundedIndexSetError(
            f"conditions do not bound a for I={sorted(s.I)}, J={sorted(s.J)}"
        )
    return lo, hi


def _satisfies_definition(a: tuple[int, ...], L: BundleExponents, s: StratumIndex) -> bool:
    n, e = L.n, L.e
    if any(a[k] > a[k + 1] for k in range(n - 1)):
        return False
    for i in range(n - s.j1, n):
        tail = sum(a[j - 1] - e for j in range(i + 1, n + 1))
        if tail > L.m_exp[i] or (i in s.I and tail != L.m_exp[i]):
            return False
    for i in range(n - s.i1, n):
        head = sum(a[j - 1] - e for j in range(1, n - i + 1))
        if head < -L.l_exp[i] or (i in s.J and head != -L.l_exp[i]):
            return False
    return True


def enumerate_A_general(L: BundleExponents, s: StratumIndex) -> list[LabelPair]:
    """All (a, b) satisfying conditions (1)-(4) of the general definition.

    Raises :class:`UnboundedIndexSetError` if the coordinate range cannot be
    certified finite, and ``ValueError`` for a non-admissible stratum.
    """
    if s.n != L.n:
        raise ValueError("stratum and bundle have different ranks")
    lo, hi = _coordinate_bounds(L, s)
    s.require_admissible()
    n, e, d = L.n, L.e, L.d
    out = []
    for shifted in _ascending(n, lo, hi):
        a = tuple(x + e for x in shifted)
        if _satisfies_definition(a, L, s):
            # condition (4): a_i - e = -b_{n-i+1} + d
            b = tuple(d - (a[n - i] - e) for i in range(1, n + 1))
            out.append(LabelPair(a, b))
    return out


def enumerate_A_delta(n: int, kappa: int, s: StratumIndex | None = None) -> list[LabelPair]:
    """Closed form of A_{I,J}(Delta^kappa):
    0 = a_1 = .. = a_{n-j1} <= .. <= a_{i1} <= a_{i1+1} = .. = a_n = kappa.
    """
    s = s or StratumIndex(n)
    if s.n != n:
        raise ValueError("stratum has the wrong rank")
    s.require_admissible()
    zeros, kappas = n - s.j1, n - s.i1
    free = n - zeros - kappas
    return [
        LabelPair.from_a((0,) * zeros + mid + (kappa,) * kappas, kappa)
        for mid in _ascending(free, 0, kappa)
    ]


def enumerate_A_prime(n: int, kappa: int) -> list[LabelPair]:
    """0 <= a_1 <= .. <= a_n <= kappa - 1, b_i = kappa - a_{n-i+1}."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    return [LabelPair.from_a(a, kappa) for a in _ascending(n, 0, kappa - 1)]


def enumerate_A_double_prime(n: int, kappa: int) -> list[LabelPair]:
    """1 <= b_1 <= .. <= b_n <= kappa, a_i = kappa - b_{n-i+1}."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    out = [
        LabelPair(tuple(kappa - x for x in reversed(b)), b)
        for b in _ascending(n, 1, kappa)
    ]
    return sorted(out)


def enumerate_SA_prime(n: int, kappa: int) -> list[LabelPair]:
    """0 = a'_1 <= .. <= a'_n <= kappa with b'_i = a'_n - a'_{n-i+1}."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    out = []
    for tail in _ascending(n - 1, 0, kappa):
        a = (0,) + tail
        out.append(LabelPair(a, tuple(a[-1] - x for x in reversed(a))))
    return out


def _check_pq(n: int, p: int, q: int):
    if not (0 <= p <= n and 0 <= q <= n and p + q >= n):
        raise ValueError(f"invalid (p, q) = ({p}, {q}) for n = {n}")


def in_A_pq(x: LabelPair, kappa: int, p: int, q: int, primed: bool = False) -> bool:
    """Membership test for A_{p,q} (or A'_{p,q}) given x in A(Delta^kappa)."""
    n = x.n
    a = x.a
    if any(a[i] != 0 for i in range(n - q)):
        return False
    if any(a[i] != kappa for i in range(p, n)):
        return False
    if primed and any(a[i] > kappa - 1 for i in range(p)):
        return False
    return True


def enumerate_A_pq(n: int, kappa: int, p: int, q: int, primed: bool = False) -> list[LabelPair]:
    """A_{p,q}: a_i = 0 for i <= n-q and a_i = kappa for i > p.

    ``primed`` adds a_i <= kappa - 1 for i <= p.
    """
    _check_pq(n, p, q)
    return [x for x in enumerate_A_delta(n, kappa) if in_A_pq(x, kappa, p, q, primed)]


def flag_level(x: LabelPair, kappa: int) -> int:
    """Number of entries of a below kappa: the i with x in A'_{i,q}."""
    return sum(1 for v in x.a if v <= kappa - 1)


def reduce_label(x: LabelPair) -> LabelPair:
    return LabelPair(tuple(v - x.a[0] for v in x.a), tuple(v - x.b[0] for v in x.b))
