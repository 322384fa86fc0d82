"""Exact counting, enumeration and identity checks for colored integer compositions.

A colored composition of ``n`` is an ordered tuple of positive parts summing
to ``n`` where a part of size ``i`` carries one of ``b_i`` colors. The color
sequence is chosen with :class:`ColorFamily`.
"""

__version__ = "0.1.0"

from .closed_forms import catalan_convolution, closed_nk, closed_total, weak_composition_interpretation
from .counting import CountTable, build_table, count_nk, count_total
from .enumeration import (
    ColoredComposition,
    MatrixComposition,
    count_colored,
    enumerate_colored,
    enumerate_matrix,
)
from .errors import CapExceededError, ColorCompError, ConsistencyError, DomainError, FamilyError
from .recurrence import (
    CoeffTriangle,
    RecurrenceSpec,
    build_triangle,
    explicit_coeffs_p1,
    extract_coeffs,
    verify_recurrence,
)
from .sequences import ColorFamily, binomial, catalan, catalan_triangle, color_count
from .series import TruncatedSeries, coeff_of_power, series_from_family, series_mul

__all__ = [
    "CapExceededError",
    "CoeffTriangle",
    "ColorCompError",
    "ColorFamily",
    "ColoredComposition",
    "ConsistencyError",
    "CountTable",
    "DomainError",
    "FamilyError",
    "MatrixComposition",
    "RecurrenceSpec",
    "TruncatedSeries",
    "binomial",
    "build_table",
    "build_triangle",
    "catalan",
    "catalan_convolution",
    "catalan_triangle",
    "closed_nk",
    "closed_total",
    "coeff_of_power",
    "color_count",
    "count_colored",
    "count_nk",
    "count_total",
    "enumerate_colored",
    "enumerate_matrix",
    "explicit_coeffs_p1",
    "extract_coeffs",
    "series_from_family",
    "series_mul",
    "verify_recurrence",
    "weak_composition_interpretation",
]
