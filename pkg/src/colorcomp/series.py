"""Truncated power series over the integers.

``C(n, k)`` is the coefficient of ``x^n`` in ``B(x)^k`` with
``B(x) = sum_{i>=1} b_i x^i``. This module computes that coefficient by
series arithmetic alone, as an oracle independent of the counting DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .sequences import ColorFamily, color_count

__all__ = [
    "TruncatedSeries",
    "coeff_of_power",
    "series_from_family",
    "series_mul",
    "series_pow",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``a_0..a_N`` of a power series modulo ``x^(N+1)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise DomainError("a truncated series needs at least the constant coefficient")

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __pow__(self, k: int) -> TruncatedSeries:
        return series_pow(self, k)

    @classmethod
    def one(cls, bound: int) -> TruncatedSeries:
        return cls((1,) + (0,) * bound)

    @classmethod
    def from_list(cls, coeffs: Sequence[int], bound: int | None = None) -> TruncatedSeries:
        coeffs = list(coeffs)
        if bound is not None:
            coeffs = (coeffs + [0] * (bound + 1))[: bound + 1]
        return cls(tuple(coeffs))


def series_from_family(family: ColorFamily, bound: int) -> TruncatedSeries:
    """``B(x) = sum b_i x^i`` truncated at degree ``bound``."""
    if bound < 0:
        raise DomainError(f"degree bound must be >= 0, got {bound}")
    return TruncatedSeries((0,) + tuple(color_count(family, i) for i in range(1, bound + 1)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common degree bound."""
    if a.degree_bound != b.degree_bound:
        raise DomainError(f"degree bounds differ: {a.degree_bound} != {b.degree_bound}")
    n = a.degree_bound
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for i, x in enumerate(ac):
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """``a**k`` by repeated squaring (``a**0`` is the unit series)."""
    if k < 0:
        raise DomainError(f"exponent must be >= 0, got {k}")
    result = TruncatedSeries.one(a.degree_bound)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def coeff_of_power(family: ColorFamily, n: int, k: int) -> int:
    """``[x^n] B(x)^k``, which equals the number of colored compositions of ``n`` into ``k`` parts."""
    if n < 0 or k < 0:
        raise DomainError(f"n and k must be >= 0, got n={n}, k={k}")
    return series_pow(series_from_family(family, n), k)[n]
