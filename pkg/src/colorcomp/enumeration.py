"""Brute-force generation of colored and matrix compositions.

These generators are ground truth for small ``n``: they never call into the
counting DP except to estimate output size for the resource guard.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import prod
from typing import Iterator

from .counting import count_nk, count_total
from .errors import CapExceededError, DomainError
from .sequences import ColorFamily, catalan, color_count

__all__ = [
    "DEFAULT_ENUM_MAX_ITEMS",
    "DEFAULT_ENUM_MAX_N",
    "ColoredComposition",
    "MatrixComposition",
    "compositions",
    "count_colored",
    "enumerate_colored",
    "enum_max_items",
    "enumerate_matrix",
    "weak_catalan_tuple_sum",
]

DEFAULT_ENUM_MAX_N = 25
DEFAULT_ENUM_MAX_ITEMS = 10**7


def enum_max_items() -> int:
    raw = os.environ.get("COLORCOMP_ENUM_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_ENUM_MAX_ITEMS
    try:
        return int(raw)
    except ValueError:
        raise CapExceededError(f"COLORCOMP_ENUM_CAP must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class ColoredComposition:
    """Ordered ``(part, color)`` pairs; colors are 1-based labels ``1..b_part``."""

    parts: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(part for part, _ in self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def is_valid(self, family: ColorFamily, n: int) -> bool:
        if self.n != n:
            return False
        return all(part >= 1 and 1 <= color <= color_count(family, part) for part, color in self.parts)

    def to_json(self) -> dict:
        return {"parts": [[part, color] for part, color in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> ColoredComposition:
        return cls(tuple((int(a), int(b)) for a, b in data["parts"]))


@dataclass(frozen=True)
class MatrixComposition:
    """A matrix of nonnegative integers stored column by column."""

    rows: int
    columns: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(map(sum, self.columns))

    def is_valid(self, n: int) -> bool:
        return (
            self.n == n
            and all(len(col) == self.rows for col in self.columns)
            and all(any(col) and min(col) >= 0 for col in self.columns)
        )

    def to_json(self) -> dict:
        return {"columns": [list(col) for col in self.columns]}

    @classmethod
    def from_json(cls, data: dict, rows: int | None = None) -> MatrixComposition:
        columns = tuple(tuple(int(v) for v in col) for col in data["columns"])
        if rows is None:
            if not columns:
                raise DomainError("row count is required to decode an empty matrix")
            rows = len(columns[0])
        return cls(rows, columns)


def compositions(n: int, k: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordinary compositions of ``n``, grouped by part count, each group in lexicographic order."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n == 0:
        if k is None or k == 0:
            yield ()
        return
    counts = range(1, n + 1) if k is None else [k]
    for kk in counts:
        if 1 <= kk <= n:
            yield from _fixed(n, kk)


def _fixed(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _fixed(n - first, k - 1):
            yield (first,) + rest


def _check_n(n: int, max_n: int | None) -> None:
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    limit = DEFAULT_ENUM_MAX_N if max_n is None else max_n
    if n > limit:
        raise CapExceededError(f"enumeration of n={n} exceeds the cap n <= {limit}", estimate=None)


def _check_items(estimate: int) -> None:
    cap = enum_max_items()
    if estimate > cap:
        raise CapExceededError(
            f"enumeration would emit about {estimate} items, above the cap of {cap} "
            "(set COLORCOMP_ENUM_CAP to raise it)",
            estimate=estimate,
        )


def enumerate_colored(
    family: ColorFamily, n: int, k: int | None = None, *, max_n: int | None = None
) -> Iterator[ColoredComposition]:
    """Yield every colored composition of ``n`` (with ``k`` parts if given) exactly once.

    Output is grouped by part count, then ordered lexicographically by the part
    tuple, then by the color tuple.
    """
    _check_n(n, max_n)
    if k is not None and k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    _check_items(count_total(family, n) if k is None else count_nk(family, n, k))
    return _colored(family, n, k)


def _colored(family: ColorFamily, n: int, k: int | None) -> Iterator[ColoredComposition]:
    b = {i: color_count(family, i) for i in range(1, n + 1)}
    for comp in compositions(n, k):
        if any(b[part] == 0 for part in comp):
            continue
        for colors in itertools.product(*(range(1, b[part] + 1) for part in comp)):
            yield ColoredComposition(tuple(zip(comp, colors)))


def count_colored(family: ColorFamily, n: int, k: int | None = None, *, max_n: int | None = None) -> int:
    """Number of colored compositions, summed over ordinary compositions without materializing colors."""
    _check_n(n, max_n)
    b = {i: color_count(family, i) for i in range(1, n + 1)}
    return sum(prod(b[part] for part in comp) for comp in compositions(n, k))


def _columns(rows: int, limit: int) -> list[tuple[int, ...]]:
    """Nonzero column vectors with entry sum at most ``limit``, lexicographically sorted."""
    out = []
    for col in itertools.product(range(limit + 1), repeat=rows):
        s = sum(col)
        if 0 < s <= limit:
            out.append(col)
    return out


def enumerate_matrix(k_rows: int, n: int, *, max_n: int | None = None) -> Iterator[MatrixComposition]:
    """Yield each ``k_rows``-row matrix composition of ``n`` once, in lexicographic column order."""
    if k_rows < 1:
        raise DomainError(f"k_rows must be >= 1, got {k_rows}")
    _check_n(n, max_n)
    _check_items(count_total(ColorFamily.matrix(k_rows), n))
    return _matrices(k_rows, n)


def _matrices(k_rows: int, n: int) -> Iterator[MatrixComposition]:
    columns = _columns(k_rows, n)
    sums = [sum(c) for c in columns]

    def extend(remaining: int, prefix: tuple) -> Iterator[tuple]:
        if remaining == 0:
            yield prefix
            return
        for col, s in zip(columns, sums):
            if s <= remaining:
                yield from extend(remaining - s, prefix + (col,))

    for cols in extend(n, ()):
        yield MatrixComposition(k_rows, cols)


def weak_catalan_tuple_sum(total: int, k: int) -> int:
    """Sum of ``c_{i_1} ... c_{i_k}`` over all weak ``k``-tuples with ``i_1 + ... + i_k = total``.

    Plain brute force over ``itertools.product``; keep ``total`` and ``k`` small.
    """
    if total < 0 or k < 0:
        return 0
    if k == 0:
        return 1 if total == 0 else 0
    return sum(
        prod(catalan(i) for i in tup)
        for tup in itertools.product(range(total + 1), repeat=k)
        if sum(tup) == total
    )
