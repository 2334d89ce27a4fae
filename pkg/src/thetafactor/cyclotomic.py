"""Exact arithmetic in Z[zeta_m].

Elements are integer polynomials in zeta reduced modulo the m-th cyclotomic
polynomial, so two elements are equal exactly when their coefficient vectors
are.  Coefficients are Python ints (no overflow).
"""

from __future__ import annotations

import cmath
import functools
import math
from typing import Sequence


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # den must be monic; coefficients are low -> high
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return quot, rem


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the monic cyclotomic polynomial Phi_m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
        assert not any(rem), "cyclotomic division left a remainder"
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(coeffs: Sequence[int], m: int) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, deg - 1, -1):
        t = c[k]
        if t:
            for j in range(deg + 1):
                c[k - deg + j] -= t * phi[j]
    c = c[:deg]
    c.extend([0] * (deg - len(c)))
    return tuple(c)


class CycElt:
    """An element of Z[zeta_m] in reduced form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[int] = (), *, reduced: bool = False):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        if reduced:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _reduce([int(c) for c in coeffs], m)

    @classmethod
    def integer(cls, m: int, value: int) -> "CycElt":
        return cls(m, [value])

    @classmethod
    def zero(cls, m: int) -> "CycElt":
        return cls(m, ())

    @classmethod
    def one(cls, m: int) -> "CycElt":
        return cls(m, [1])

    def _coerce(self, other) -> "CycElt":
        if isinstance(other, CycElt):
            if other.m != self.m:
                raise ValueError(f"mixed orders m={self.m} and m={other.m}")
            return other
        if isinstance(other, int):
            return CycElt(self.m, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElt(
            self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)], reduced=True
        )

    __radd__ = __add__

    def __neg__(self):
        return CycElt(self.m, [-a for a in self.coeffs], reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElt(
            self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)], reduced=True
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElt(self.m, [a * other for a in self.coeffs], reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        x, y = self.coeffs, other.coeffs
        prod = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        return CycElt(self.m, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycElt.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycElt(self.m, [other])
        if not isinstance(other, CycElt):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        body = " + ".join(terms) or "0"
        return f"CycElt(m={self.m}: {body})"

    def galois(self, k: int) -> "CycElt":
        """Image under zeta -> zeta^k (an automorphism when gcd(k, m) == 1)."""
        full = [0] * self.m
        for j, c in enumerate(self.coeffs):
            full[(j * k) % self.m] += c
        return CycElt(self.m, full)

    def conjugate(self) -> "CycElt":
        return self.galois(-1)

    def as_integer(self) -> int | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else 0

    def embed(self) -> complex:
        """Evaluate at zeta_m = exp(2 pi i / m)."""
        re = math.fsum(c * math.cos(2 * math.pi * k / self.m) for k, c in enumerate(self.coeffs))
        im = math.fsum(c * math.sin(2 * math.pi * k / self.m) for k, c in enumerate(self.coeffs))
        return complex(re, im)

    def norm(self) -> int:
        """Field norm down to Q: the product of all Galois conjugates."""
        prod = CycElt.one(self.m)
        for k in range(1, self.m + 1):
            if math.gcd(k, self.m) == 1:
                prod = prod * self.galois(k)
        value = prod.as_integer()
        assert value is not None
        return value

    def exact_div(self, other: "CycElt") -> "CycElt":
        """Quotient self / other, which must lie in Z[zeta_m]."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[zeta_m]")
        # self/other = self * prod_{k != 1} sigma_k(other) / N(other)
        cofactor = CycElt.one(self.m)
        for k in range(2, self.m + 1):
            if math.gcd(k, self.m) == 1:
                cofactor = cofactor * other.galois(k)
        norm = (cofactor * other).as_integer()
        num = self * cofactor
        q = []
        for c in num.coeffs:
            d, r = divmod(c, norm)
            if r:
                raise ArithmeticError("quotient is not in Z[zeta_m]")
            q.append(d)
        return CycElt(self.m, q, reduced=True)


def root_power(m: int, k: int) -> CycElt:
    """zeta_m ** k, exponent taken modulo m."""
    k %= m
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return CycElt(m, coeffs)


def conjugate(x: CycElt) -> CycElt:
    return x.conjugate()


def as_integer(x: CycElt) -> int | None:
    return x.as_integer()


def embed(x: CycElt) -> complex:
    return x.embed()


DET_SIZE_CAP = 6


def _det_cofactor(rows: list[list[CycElt]], m: int) -> CycElt:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = CycElt.zero(m)
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * _det_cofactor(minor, m)
        total = total - term if j % 2 else total + term
    return total


def _det_bareiss(rows: list[list[CycElt]], m: int) -> CycElt:
    a = [list(r) for r in rows]
    size = len(a)
    sign = 1
    prev = CycElt.one(m)
    for k in range(size - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return CycElt.zero(m)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[-1][-1]
    return det if sign == 1 else -det


def det_exact(entries: Sequence[Sequence[CycElt]], cap: int = DET_SIZE_CAP) -> CycElt:
    """Exact determinant over Z[zeta_m].

    Cofactor expansion up to 4x4, fraction-free (Bareiss) elimination with
    exact ring division above that.
    """
    rows = [list(r) for r in entries]
    size = len(rows)
    if size == 0:
        raise ValueError("empty matrix")
    if any(len(r) != size for r in rows):
        raise ValueError("matrix is not square")
    if size > cap:
        raise ValueError(f"matrix size {size} exceeds cap {cap}")
    orders = {x.m for r in rows for x in r if isinstance(x, CycElt)}
    if len(orders) != 1:
        raise ValueError(f"entries must share one order m, got {sorted(orders)}")
    (m,) = orders
    rows = [[x if isinstance(x, CycElt) else CycElt.integer(m, x) for x in r] for r in rows]
    if size <= 4:
        return _det_cofactor(rows, m)
    return _det_bareiss(rows, m)
