"""Dimensions of spaces of generalized theta functions.

Every function returns a :class:`DimensionResult`.  The floating value is
rounded to the nearest integer and the rounding is refused (with
:class:`RoundingError`) when the residual exceeds the relative tolerance.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .characters import j_norm_sq_table
from .indexsets import (
    LabelPair,
    enumerate_A_delta,
    enumerate_A_double_prime,
    enumerate_A_prime,
    reduce_label,
)
from .lattice import enumerate_alcove, rho

DEFAULT_TOLERANCE = float(os.environ.get("THETAFACTOR_TOLERANCE", "1e-6"))


class RoundingError(ArithmeticError):
    """A dimension formula did not evaluate to an integer within tolerance."""


@dataclass(frozen=True)
class DimensionResult:
    value: int
    raw: float
    residual: float

    def __int__(self):
        return self.value


def round_dimension(raw: float, tolerance: float = DEFAULT_TOLERANCE, what: str = "dimension") -> DimensionResult:
    value = round(raw)
    residual = abs(raw - value)
    if residual > tolerance * max(1.0, abs(raw)) or value < 0:
        raise RoundingError(
            f"{what} evaluated to {raw!r}, not an integer within relative tolerance "
            f"{tolerance:g}; try a smaller case or higher precision"
        )
    return DimensionResult(int(value), float(raw), float(residual))


def _check_ranges(n: int, kappa: int, g: int):
    if n < 1 or kappa < 1 or g < 1:
        raise ValueError(f"need n, kappa, g >= 1 (got n={n}, kappa={kappa}, g={g})")


def _normalizer(n: int, kappa: int) -> int:
    return n * (n + kappa) ** (n - 1)


def _rho_row(n: int, kappa: int) -> np.ndarray:
    # rho is the lexicographically smallest alcove point
    return j_norm_sq_table(n, kappa)[0]


def svb_raw(n: int, kappa: int, g: int) -> float:
    _check_ranges(n, kappa, g)
    vals = _rho_row(n, kappa)
    # |J(rho, mu)|^2 never vanishes (Vandermonde in the zeta^{mu_j}), so the
    # negative power is safe
    terms = 1.0 / vals ** (g - 1)
    return float(_normalizer(n, kappa)) ** (g - 1) * math.fsum(terms)


def _lambda_index(n: int, kappa: int, a_prime: tuple[int, ...]) -> int:
    lam = tuple(r + a_prime[n - 1 - i] for i, r in enumerate(rho(n).coords))
    coords = [p.coords for p in enumerate_alcove(n, kappa)]
    return coords.index(lam)


def _check_a_prime(n: int, kappa: int, a_prime: Iterable[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in a_prime)
    if len(a) != n:
        raise ValueError(f"a' must have length {n}")
    if a[0] != 0 or any(a[i] > a[i + 1] for i in range(n - 1)) or a[-1] > kappa:
        raise ValueError(f"a' = {a} violates 0 = a'_1 <= ... <= a'_n <= kappa")
    return a


def spb_raw(n: int, kappa: int, g: int, a_prime: Iterable[int]) -> float:
    _check_ranges(n, kappa, g)
    a = _check_a_prime(n, kappa, a_prime)
    table = j_norm_sq_table(n, kappa)
    lam_row = table[_lambda_index(n, kappa, a)]
    rho_row = table[0]
    terms = lam_row / rho_row ** (g - 1)
    return float(_normalizer(n, kappa)) ** (g - 2) * math.fsum(terms)


def dim_svb(n: int, kappa: int, g: int, tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    """Fixed-determinant Verlinde number on a smooth genus-g curve."""
    return round_dimension(svb_raw(n, kappa, g), tolerance, f"dim_svb({n},{kappa},{g})")


def dim_spb(n: int, kappa: int, g: int, a_prime, tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    """Two-point parabolic SL_n dimension with weights (lambda, lambda*),
    lambda = rho + sum_i a'_{n-i+1} e_i."""
    a = tuple(a_prime)
    return round_dimension(spb_raw(n, kappa, g, a), tolerance, f"dim_spb({n},{kappa},{g},{a})")


def dim_vb(n: int, kappa: int, g: int, tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    raw = (kappa / n) ** g * svb_raw(n, kappa, g)
    return round_dimension(raw, tolerance, f"dim_vb({n},{kappa},{g})")


def _check_in_delta(x: LabelPair, kappa: int):
    n = x.n
    a = x.a
    if a[0] < 0 or a[-1] > kappa or any(a[i] > a[i + 1] for i in range(n - 1)):
        raise ValueError(f"{x} is not in A(Delta^{kappa})")
    if x.b != tuple(kappa - v for v in reversed(a)):
        raise ValueError(f"{x} does not satisfy b_i = kappa - a_(n-i+1)")


def pb_raw(n: int, kappa: int, g: int, x: LabelPair) -> float:
    if x.n != n:
        raise ValueError("label has the wrong rank")
    _check_in_delta(x, kappa)
    return (kappa / n) ** (g - 1) * spb_raw(n, kappa, g, reduce_label(x).a)


def dim_pb(n: int, kappa: int, g: int, x: LabelPair, tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    return round_dimension(pb_raw(n, kappa, g, x), tolerance, f"dim_pb({n},{kappa},{g},{x.a})")


def dim_label_sum(n: int, kappa: int, g: int, labels: Iterable[LabelPair],
                  tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    """Sum of dim_pb over a label set, each summand rounded first."""
    parts = [dim_pb(n, kappa, g, x, tolerance) for x in labels]
    raw = math.fsum(p.raw for p in parts)
    return DimensionResult(sum(p.value for p in parts), raw, abs(raw - sum(p.value for p in parts)))


def dim_gvb(n: int, kappa: int, g: int, tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    """Dimension on the Gieseker side: the sum of dim_pb over A'."""
    _check_ranges(n, kappa, g)
    return dim_label_sum(n, kappa, g, enumerate_A_prime(n, kappa), tolerance)


def dim_gvb_double_prime(n: int, kappa: int, g: int, tolerance: float = DEFAULT_TOLERANCE) -> DimensionResult:
    """Same total computed over A'' (the other choice of node branch)."""
    _check_ranges(n, kappa, g)
    return dim_label_sum(n, kappa, g, enumerate_A_double_prime(n, kappa), tolerance)


def pb_dims(n: int, kappa: int, g: int, tolerance: float = DEFAULT_TOLERANCE) -> dict[LabelPair, int]:
    """dim_pb for every label of A(Delta^kappa)."""
    return {x: dim_pb(n, kappa, g, x, tolerance).value for x in enumerate_A_delta(n, kappa)}
