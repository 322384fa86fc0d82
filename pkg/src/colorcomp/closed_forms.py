"""Closed formulas for the counts, keyed by color family, and the Catalan identities.

Every function here evaluates a formula directly from binomial coefficients
and Catalan numbers; none of them runs the counting recursion except
:func:`weak_composition_interpretation`, which is defined as a DP count.
"""

from __future__ import annotations

from typing import Literal

from .counting import count_nk
from .errors import DomainError
from .sequences import ColorFamily, binomial, catalan, catalan_triangle

__all__ = [
    "CONVOLUTION_BOUNDS",
    "ballot",
    "catalan_convolution",
    "closed_nk",
    "closed_total",
    "has_closed_nk",
    "has_closed_total",
    "shifted_catalan_sum",
    "weak_composition_interpretation",
]

_NK_KINDS = frozenset(
    {
        "constant",
        "constant_shifted",
        "exponential",
        "linear0",
        "linear",
        "binom_row",
        "figured",
        "binom_col",
        "catalan",
        "catalan_shifted",
    }
)
_TOTAL_KINDS = _NK_KINDS - {"figured"}

CONVOLUTION_BOUNDS = ("corrected", "paper")


def has_closed_nk(family: ColorFamily) -> bool:
    return family.kind in _NK_KINDS


def has_closed_total(family: ColorFamily) -> bool:
    return family.kind in _TOTAL_KINDS


def ballot(n: int, k: int) -> int:
    """``B(n, k)`` extended by zero outside ``1 <= k <= n`` (including ``n = 0``)."""
    if n < 1 or k < 1 or k > n:
        return 0
    return catalan_triangle(n, k)


def shifted_catalan_sum(n: int, k: int, start: int = 0) -> int:
    """``sum_{i=start}^{k-1} C(k, i) B(n-k, k-i)``, the right side of the Catalan/ballot identity."""
    return sum(binomial(k, i) * ballot(n - k, k - i) for i in range(start, k))


def _check(n: int, k: int | None = None) -> None:
    if n < 1:
        raise DomainError(f"closed forms need n >= 1, got {n}")
    if k is not None and not 1 <= k <= n:
        raise DomainError(f"closed forms need 1 <= k <= n, got n={n}, k={k}")


def closed_nk(family: ColorFamily, n: int, k: int) -> int | None:
    """Closed-form ``C(n, k)`` for ``1 <= k <= n``, or ``None`` when no formula applies."""
    _check(n, k)
    kind = family.kind
    if kind == "constant":
        return family.p**k * binomial(n - 1, k - 1)
    if kind == "constant_shifted":
        return family.p**k * binomial(n - (family.m - 1) * k - 1, k - 1)
    if kind == "exponential":
        return family.p ** (n - k) * binomial(n - 1, k - 1)
    if kind == "linear0":
        return family.m**k * binomial(n - 1, 2 * k - 1)
    if kind == "linear":
        return family.m**k * binomial(n + k - 1, 2 * k - 1)
    if kind == "binom_row":
        return binomial(family.p * k, n - k)
    if kind == "figured":
        p = family.p
        return binomial(n + p * k - 1, p * k + k - 1)
    if kind == "binom_col":
        q = family.q
        return binomial(n + k - 1, q * k + k - 1)
    if kind == "catalan":
        return catalan_triangle(n, k)
    if kind == "catalan_shifted":
        # the identity's right side vanishes at n == k while the count is 1
        if n == k:
            return None
        return shifted_catalan_sum(n, k)
    return None


def closed_total(family: ColorFamily, n: int) -> int | None:
    """Closed-form total count over all part counts, or ``None`` when no formula applies."""
    _check(n)
    kind = family.kind
    ks = range(1, n + 1)
    if kind == "constant":
        p = family.p
        return p * (1 + p) ** (n - 1)
    if kind == "constant_shifted":
        p, m = family.p, family.m
        return sum(binomial(n - (m - 1) * k - 1, k - 1) * p**k for k in ks)
    if kind == "exponential":
        return (1 + family.p) ** (n - 1)
    if kind == "linear0":
        return sum(binomial(n - 1, 2 * k - 1) * family.m**k for k in ks)
    if kind == "linear":
        return sum(binomial(n + k - 1, 2 * k - 1) * family.m**k for k in ks)
    if kind == "binom_row":
        return sum(binomial(family.p * k, n - k) for k in ks)
    if kind == "binom_col":
        q = family.q
        return sum(binomial(n + k - 1, q * k + k - 1) for k in ks)
    if kind == "catalan":
        return binomial(2 * n - 1, n)
    if kind == "catalan_shifted":
        return catalan(n)
    return None


def catalan_convolution(n: int, bound: Literal["corrected", "paper"] = "corrected") -> int:
    """``1 + sum_{k=1}^{n-1} sum_i C(k, i) B(n-k, k-i)``.

    With ``bound="corrected"`` the inner sum starts at ``i = 0`` and the result
    is the Catalan number ``c_n``. ``bound="paper"`` starts it at ``i = 1``,
    which drops the ``i = 0`` terms and falls short of ``c_n`` for ``n >= 2``.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if bound not in CONVOLUTION_BOUNDS:
        raise DomainError(f"bound must be one of {CONVOLUTION_BOUNDS}, got {bound!r}")
    start = 0 if bound == "corrected" else 1
    return 1 + sum(shifted_catalan_sum(n, k, start) for k in range(1, n))


def weak_composition_interpretation(n: int, k: int) -> int:
    """Weak compositions of ``n - k`` into ``k`` Catalan-colored parts, zeros allowed.

    Equal to the count of colored compositions of ``n`` into ``k`` parts with
    ``b_i = c_(i-1)``; each part ``i`` corresponds to a weak part ``i - 1``.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need n >= k >= 1, got n={n}, k={k}")
    return count_nk(ColorFamily.catalan_shifted(), n, k)
