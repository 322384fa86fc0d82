"""Constant-coefficient recurrences for ``b_i = C(i+p-1, q)``.

The totals ``C(n)`` of this family obey a homogeneous linear recurrence of
order ``q + 1``. Its coefficients are read off a signed Pascal-like triangle
``c(i, j)`` built from three row rules:

    c(0, 0) = -C(p, q),  c(1, 0) = 1
    c(0, j+1) = -c(0, j) - C(p+1, q-j)
    c(i, j+1) = c(i-1, j) - c(i, j)        for 1 <= i <= j+1
    c(j+2, j+1) = c(j+1, j)

and ``m_i = -c(i+1, q+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .counting import count_total
from .errors import ConsistencyError, DomainError
from .sequences import ColorFamily, binomial

__all__ = [
    "CoeffTriangle",
    "RecurrenceReport",
    "RecurrenceSpec",
    "build_triangle",
    "explicit_coeffs_p1",
    "extract_coeffs",
    "verify_recurrence",
]


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows ``0..q+1`` of the coefficient triangle; row ``j`` holds ``c(0, j) .. c(j+1, j)``."""

    p: int
    q: int
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        if not (0 <= j < len(self.rows) and 0 <= i <= j + 1):
            raise DomainError(f"c({i}, {j}) is outside the triangle")
        return self.rows[j][i]

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "rows": [[str(v) for v in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> CoeffTriangle:
        return cls(int(data["p"]), int(data["q"]), tuple(tuple(int(v) for v in row) for row in data["rows"]))


@dataclass(frozen=True)
class RecurrenceSpec:
    """``C(n + order) = sum_i coeffs[i] * C(n + i)`` for ``n >= start_index``."""

    coeffs: tuple[int, ...]
    start_index: int = 2
    p: int | None = None
    q: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise DomainError("a recurrence needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def predict(self, window: list[int] | tuple[int, ...]) -> int:
        """Next term from the last ``order`` terms ``C(n), ..., C(n+order-1)``."""
        return sum(m * c for m, c in zip(self.coeffs, window))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
            "start_index": self.start_index,
            "p": self.p,
            "q": self.q,
        }

    @classmethod
    def from_json(cls, data: dict) -> RecurrenceSpec:
        spec = cls(
            coeffs=tuple(int(c) for c in data["coeffs"]),
            start_index=int(data.get("start_index", 2)),
            p=data.get("p"),
            q=data.get("q"),
        )
        if "order" in data and int(data["order"]) != spec.order:
            raise DomainError("order does not match the number of coefficients")
        return spec


def build_triangle(p: int, q: int) -> CoeffTriangle:
    if p < 1 or q < 0:
        raise DomainError(f"need p >= 1 and q >= 0, got p={p}, q={q}")
    rows = [(-binomial(p, q), 1)]
    for j in range(q + 1):
        prev = rows[j]
        row = [0] * (j + 3)
        row[0] = -prev[0] - binomial(p + 1, q - j)
        for i in range(1, j + 2):
            row[i] = prev[i - 1] - prev[i]
        row[j + 2] = prev[j + 1]
        rows.append(tuple(row))
    return CoeffTriangle(p, q, tuple(rows))


def extract_coeffs(p: int, q: int, triangle: CoeffTriangle | None = None) -> RecurrenceSpec:
    """Recurrence coefficients ``m_0..m_q`` from the last triangle row.

    The same values follow from row ``q`` as ``c(i+1, q) - c(i, q)``; both are
    computed and a mismatch raises :class:`ConsistencyError`.
    """
    t = triangle if triangle is not None else build_triangle(p, q)
    if (t.p, t.q) != (p, q):
        raise DomainError(f"triangle was built for p={t.p}, q={t.q}, not p={p}, q={q}")
    last = [-t(i + 1, q + 1) for i in range(q + 1)]
    diff = [t(i + 1, q) - t(i, q) for i in range(q + 1)]
    if last != diff:
        raise ConsistencyError(f"coefficient forms disagree for p={p}, q={q}: {last} != {diff}")
    return RecurrenceSpec(tuple(last), start_index=2, p=p, q=q)


def explicit_coeffs_p1(q: int) -> RecurrenceSpec:
    """Coefficients for ``b_i = C(i, q)`` from ``(-1)^(i+q) C(q+1, i)``, plus one on ``C(n+1)``."""
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    coeffs = [(-1) ** (i + q) * binomial(q + 1, i) for i in range(q + 1)]
    coeffs[1] += 1
    return RecurrenceSpec(tuple(coeffs), start_index=2, p=1, q=q)


@dataclass(frozen=True)
class RecurrenceReport:
    """Per-index outcome of checking a recurrence against DP totals."""

    family: ColorFamily
    spec: RecurrenceSpec
    n_lo: int
    n_hi: int
    results: tuple[tuple[int, int, int], ...] = field(repr=False)

    @property
    def failures(self) -> list[int]:
        return [n for n, lhs, rhs in self.results if lhs != rhs]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def holds_from(self) -> int | None:
        """Smallest ``n0`` in range such that every ``n`` in ``[n0, n_hi]`` passes."""
        start = None
        for n, lhs, rhs in reversed(self.results):
            if lhs != rhs:
                break
            start = n
        return start

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "spec": self.spec.to_json(),
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "ok": self.ok,
            "holds_from": self.holds_from,
            "results": [
                {"n": n, "lhs": str(lhs), "rhs": str(rhs), "ok": lhs == rhs} for n, lhs, rhs in self.results
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> RecurrenceReport:
        return cls(
            family=ColorFamily.from_json(data["family"]),
            spec=RecurrenceSpec.from_json(data["spec"]),
            n_lo=int(data["n_lo"]),
            n_hi=int(data["n_hi"]),
            results=tuple((int(r["n"]), int(r["lhs"]), int(r["rhs"])) for r in data["results"]),
        )


def verify_recurrence(family: ColorFamily, spec: RecurrenceSpec, n_lo: int, n_hi: int) -> RecurrenceReport:
    """Check ``C(n + order) == sum m_i C(n + i)`` for every ``n`` in ``[n_lo, n_hi]``."""
    if n_lo < 0 or n_hi < n_lo:
        raise DomainError(f"need 0 <= n_lo <= n_hi, got n_lo={n_lo}, n_hi={n_hi}")
    order = spec.order
    totals = [count_total(family, n) for n in range(n_hi + order + 1)]
    results = []
    for n in range(n_lo, n_hi + 1):
        lhs = totals[n + order]
        rhs = spec.predict(totals[n : n + order])
        results.append((n, lhs, rhs))
    return RecurrenceReport(family, spec, n_lo, n_hi, tuple(results))
