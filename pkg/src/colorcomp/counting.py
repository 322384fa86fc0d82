"""Exact counts of colored compositions by dynamic programming.

``count_nk`` fills the triangle ``C(n, k)`` row by row with the last-part
recursion ``C(n, k) = sum_i b_i C(n-i, k-1)``. ``count_total`` runs the
separate one-index recursion ``C(n) = sum_i b_i C(n-i)`` so the two paths
can be compared against each other.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass

from .errors import CapExceededError, DomainError
from .sequences import ColorFamily, color_counts

__all__ = [
    "DEFAULT_MAX_N",
    "CountTable",
    "build_table",
    "count_nk",
    "count_total",
    "max_n",
]

DEFAULT_MAX_N = 10000


def max_n() -> int:
    """The table-size cap; ``COLORCOMP_MAX_N`` overrides the default."""
    raw = os.environ.get("COLORCOMP_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise CapExceededError(f"COLORCOMP_MAX_N must be an integer, got {raw!r}") from None
    return value


def _check_cap(n: int) -> None:
    cap = max_n()
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the DP cap of {cap} (set COLORCOMP_MAX_N to raise it)", estimate=n)


@dataclass(frozen=True)
class CountTable:
    """Triangle of counts ``C(n, k)`` for ``0 <= k <= n <= n_max`` plus row totals.

    ``cells[n][k]`` is ``C(n, k)``; ``totals[n]`` is the row sum over ``k >= 1``
    (and ``totals[0] = 1`` for the empty composition).
    """

    family: ColorFamily
    n_max: int
    cells: tuple[tuple[int, ...], ...]
    totals: tuple[int, ...]

    def cell(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or n > self.n_max:
            raise DomainError(f"cell ({n}, {k}) outside table with n_max={self.n_max}")
        if k > n:
            return 0
        return self.cells[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.cells[n]

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "n_max": self.n_max,
            "cells": [[str(v) for v in row] for row in self.cells],
            "totals": [str(v) for v in self.totals],
        }

    @classmethod
    def from_json(cls, data: dict) -> CountTable:
        return cls(
            family=ColorFamily.from_json(data["family"]),
            n_max=int(data["n_max"]),
            cells=tuple(tuple(int(v) for v in row) for row in data["cells"]),
            totals=tuple(int(v) for v in data["totals"]),
        )


def _extend_rows(b: list[int], rows: list[list[int]], n_max: int) -> None:
    support = [i for i in range(1, len(b)) if b[i]]
    for n in range(len(rows), n_max + 1):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            acc = 0
            for i in support:
                if i > n - k + 1:
                    break
                prev = rows[n - i][k - 1]
                if prev:
                    acc += b[i] * prev
            row[k] = acc
        rows.append(row)


class _FamilyCache:
    def __init__(self, family: ColorFamily) -> None:
        self.family = family
        self.lock = threading.Lock()
        self.rows: list[list[int]] = [[1]]
        self.totals: list[int] = [1]
        self.b: list[int] = [0]

    def ensure_b(self, n: int) -> list[int]:
        if len(self.b) <= n:
            # grow geometrically so repeated calls do not recompute b_i
            self.b = color_counts(self.family, max(n, 2 * len(self.b)))
        return self.b

    def rows_upto(self, n: int) -> list[list[int]]:
        if len(self.rows) <= n:
            with self.lock:
                if len(self.rows) <= n:
                    rows = list(self.rows)
                    _extend_rows(self.ensure_b(n), rows, n)
                    self.rows = rows
        return self.rows

    def totals_upto(self, n: int) -> list[int]:
        if len(self.totals) <= n:
            with self.lock:
                totals = list(self.totals)
                b = self.ensure_b(n)
                for m in range(len(totals), n + 1):
                    totals.append(sum(b[i] * totals[m - i] for i in range(1, m + 1) if b[i]))
                self.totals = totals
        return self.totals


_caches: dict[ColorFamily, _FamilyCache] = {}
_caches_lock = threading.Lock()


def _cache(family: ColorFamily) -> _FamilyCache:
    cache = _caches.get(family)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(family, _FamilyCache(family))
    return cache


def count_nk(family: ColorFamily, n: int, k: int) -> int:
    """Number of colored compositions of ``n`` with exactly ``k`` parts."""
    if n < 0 or k < 0:
        raise DomainError(f"n and k must be >= 0, got n={n}, k={k}")
    if k > n:
        return 0
    _check_cap(n)
    return _cache(family).rows_upto(n)[n][k]


def count_total(family: ColorFamily, n: int) -> int:
    """Number of colored compositions of ``n`` with any number of parts (``C(0) = 1``)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    _check_cap(n)
    return _cache(family).totals_upto(n)[n]


def build_table(family: ColorFamily, n_max: int) -> CountTable:
    """Fully populated, immutable table of ``C(n, k)`` for ``n <= n_max``."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    _check_cap(n_max)
    rows = _cache(family).rows_upto(n_max)[: n_max + 1]
    cells = tuple(tuple(r) for r in rows)
    totals = (1,) + tuple(sum(r[1:]) for r in cells[1:])
    return CountTable(family=family, n_max=n_max, cells=cells, totals=totals)
