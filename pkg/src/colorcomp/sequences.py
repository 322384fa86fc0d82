"""Color sequences, binomial coefficients and Catalan numbers.

A :class:`ColorFamily` describes the sequence ``b = (b_1, b_2, ...)`` where
``b_i`` is the number of colors (types) available for a part of size ``i``.
Every other module takes a family as its input selector.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, FamilyError

__all__ = [
    "KINDS",
    "ColorFamily",
    "binomial",
    "catalan",
    "catalan_triangle",
    "color_count",
    "color_counts",
]

# kind -> (required parameters, minimum value of each parameter)
_PARAMS: dict[str, dict[str, int]] = {
    "constant": {"p": 1},
    "constant_shifted": {"p": 1, "m": 1},
    "exponential": {"p": 1},
    "linear0": {"m": 1},
    "linear": {"m": 1},
    "binom_row": {"p": 1},
    "figured": {"p": 1},
    "binom_col": {"q": 1},
    "binom_general": {"p": 1, "q": 0},
    "matrix": {"k_rows": 1},
    "catalan": {},
    "catalan_shifted": {},
    "custom": {},
}

KINDS: tuple[str, ...] = tuple(_PARAMS)

_FORMULAS = {
    "constant": "p",
    "constant_shifted": "0 for i < m, p for i >= m",
    "exponential": "p^(i-1)",
    "linear0": "m(i-1)",
    "linear": "m*i",
    "binom_row": "C(p, i-1)",
    "figured": "C(p+i-1, p)",
    "binom_col": "C(i, q)",
    "binom_general": "C(i+p-1, q)",
    "matrix": "C(i+k_rows-1, i)",
    "catalan": "c_i",
    "catalan_shifted": "c_(i-1)",
    "custom": "given values, then 0",
}


@dataclass(frozen=True)
class ColorFamily:
    """A parametric or custom color sequence.

    Build instances through the named constructors (``ColorFamily.constant(3)``,
    ``ColorFamily.custom([2, 1, 1])``, ...) or :meth:`from_params`. Instances
    are immutable and hashable, so they can key memo tables.
    """

    kind: str
    p: int | None = None
    q: int | None = None
    m: int | None = None
    k_rows: int | None = None
    values: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in _PARAMS:
            raise FamilyError(f"unknown family kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        required = _PARAMS[self.kind]
        for name in ("p", "q", "m", "k_rows"):
            value = getattr(self, name)
            if name in required:
                if value is None:
                    raise FamilyError(f"family {self.kind!r} requires parameter {name}")
                if isinstance(value, bool) or not isinstance(value, int):
                    raise FamilyError(f"parameter {name} must be an integer, got {value!r}")
                if value < required[name]:
                    raise FamilyError(f"parameter {name} must be >= {required[name]} for {self.kind!r}, got {value}")
            elif value is not None:
                raise FamilyError(f"family {self.kind!r} does not take parameter {name}")
        if self.kind == "custom":
            values = tuple(self.values)
            for v in values:
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise FamilyError(f"custom values must be nonnegative integers, got {v!r}")
            object.__setattr__(self, "values", values)
        elif self.values:
            raise FamilyError(f"family {self.kind!r} does not take explicit values")

    # named constructors

    @classmethod
    def constant(cls, p: int) -> ColorFamily:
        return cls("constant", p=p)

    @classmethod
    def constant_shifted(cls, p: int, m: int) -> ColorFamily:
        return cls("constant_shifted", p=p, m=m)

    @classmethod
    def exponential(cls, p: int) -> ColorFamily:
        return cls("exponential", p=p)

    @classmethod
    def linear0(cls, m: int) -> ColorFamily:
        return cls("linear0", m=m)

    @classmethod
    def linear(cls, m: int) -> ColorFamily:
        return cls("linear", m=m)

    @classmethod
    def binom_row(cls, p: int) -> ColorFamily:
        return cls("binom_row", p=p)

    @classmethod
    def figured(cls, p: int) -> ColorFamily:
        return cls("figured", p=p)

    @classmethod
    def binom_col(cls, q: int) -> ColorFamily:
        return cls("binom_col", q=q)

    @classmethod
    def binom_general(cls, p: int, q: int) -> ColorFamily:
        return cls("binom_general", p=p, q=q)

    @classmethod
    def matrix(cls, k_rows: int) -> ColorFamily:
        return cls("matrix", k_rows=k_rows)

    @classmethod
    def catalan(cls) -> ColorFamily:
        return cls("catalan")

    @classmethod
    def catalan_shifted(cls) -> ColorFamily:
        return cls("catalan_shifted")

    @classmethod
    def custom(cls, values: Iterable[int]) -> ColorFamily:
        return cls("custom", values=tuple(values))

    @classmethod
    def from_params(cls, kind: str, **params) -> ColorFamily:
        """Build a family from a kind name, ignoring parameters that are ``None``."""
        given = {k: v for k, v in params.items() if v is not None}
        if kind == "custom":
            return cls("custom", values=tuple(given.pop("values", ())), **given)
        return cls(kind, **given)

    # descriptions

    @property
    def params(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in _PARAMS[self.kind]}

    @property
    def formula(self) -> str:
        return _FORMULAS[self.kind]

    @property
    def label(self) -> str:
        if self.kind == "custom":
            shown = ",".join(map(str, self.values[:6]))
            if len(self.values) > 6:
                shown += ",..."
            return f"custom({shown})"
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind}({args})" if args else self.kind

    def __str__(self) -> str:
        return self.label

    def leading_zeros(self) -> int:
        """Number of initial terms known to vanish (``b_i = 0`` for ``i <= result``)."""
        if self.kind == "constant_shifted":
            return self.m - 1
        if self.kind == "linear0":
            return 1
        if self.kind == "binom_col":
            return self.q - 1
        if self.kind == "binom_general":
            return max(self.q - self.p, 0)
        if self.kind == "custom":
            count = 0
            for v in self.values:
                if v:
                    break
                count += 1
            return count
        return 0

    def to_json(self) -> dict:
        data: dict = {"kind": self.kind}
        data.update(self.params)
        if self.kind == "custom":
            data["values"] = [str(v) for v in self.values]
        return data

    @classmethod
    def from_json(cls, data: dict) -> ColorFamily:
        data = dict(data)
        kind = data.pop("kind")
        if kind == "custom":
            data["values"] = [int(v) for v in data.get("values", [])]
        return cls.from_params(kind, **data)


@lru_cache(maxsize=65536)
def _comb(n: int, r: int) -> int:
    return math.comb(n, r)


def binomial(n: int, r: int) -> int:
    """Binomial coefficient with the counting convention.

    ``C(n, r)`` is zero when ``r < 0``, ``r > n`` or ``n < 0``, so closed forms
    can be evaluated on their whole stated domain without case splits.
    """
    if r < 0 or n < 0 or r > n:
        return 0
    return _comb(n, r)


_catalan_values: list[int] = [1]
_catalan_lock = threading.Lock()


def catalan(i: int) -> int:
    """The Catalan number ``c_i`` (``c_0 = 1``), by the Segner convolution."""
    if i < 0:
        raise DomainError(f"Catalan index must be >= 0, got {i}")
    if i < len(_catalan_values):
        return _catalan_values[i]
    with _catalan_lock:
        vals = _catalan_values
        while len(vals) <= i:
            n = len(vals) - 1
            vals.append(sum(vals[j] * vals[n - j] for j in range(n + 1)))
        return vals[i]


def catalan_triangle(n: int, k: int) -> int:
    """Catalan triangle (ballot) number ``B(n, k) = k/n * C(2n, n+k)`` for ``1 <= k <= n``."""
    if n < 1 or k < 1 or k > n:
        raise DomainError(f"catalan_triangle needs 1 <= k <= n, got n={n}, k={k}")
    num = k * binomial(2 * n, n + k)
    value, rem = divmod(num, n)
    if rem:
        raise DomainError(f"B({n},{k}) is not integral")  # cannot happen for valid input
    return value


def color_count(family: ColorFamily, i: int) -> int:
    """Return ``b_i`` for ``family`` (``i >= 1``)."""
    if i < 1:
        raise DomainError(f"part size must be >= 1, got {i}")
    kind = family.kind
    if kind == "constant":
        return family.p
    if kind == "constant_shifted":
        return family.p if i >= family.m else 0
    if kind == "exponential":
        return family.p ** (i - 1)
    if kind == "linear0":
        return family.m * (i - 1)
    if kind == "linear":
        return family.m * i
    if kind == "binom_row":
        return binomial(family.p, i - 1)
    if kind == "figured":
        return binomial(family.p + i - 1, family.p)
    if kind == "binom_col":
        return binomial(i, family.q)
    if kind == "binom_general":
        return binomial(i + family.p - 1, family.q)
    if kind == "matrix":
        return binomial(i + family.k_rows - 1, i)
    if kind == "catalan":
        return catalan(i)
    if kind == "catalan_shifted":
        return catalan(i - 1)
    # custom
    return family.values[i - 1] if i <= len(family.values) else 0


def color_counts(family: ColorFamily, n: int) -> list[int]:
    """``[0, b_1, ..., b_n]``, indexed by part size."""
    return [0] + [color_count(family, i) for i in range(1, n + 1)]
