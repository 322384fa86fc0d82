import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colorcomp import ColorFamily, TruncatedSeries, catalan, coeff_of_power, count_nk, count_total
from colorcomp import series_from_family, series_mul
from colorcomp.errors import DomainError
from colorcomp.series import series_pow

F = ColorFamily


def test_series_from_family_examples():
    assert series_from_family(F.constant(1), 4).coeffs == (0, 1, 1, 1, 1)
    assert series_from_family(F.catalan(), 3).coeffs == (0, 1, 2, 5)
    assert series_from_family(F.binom_col(2), 4).coeffs == (0, 0, 1, 3, 6)
    assert series_from_family(F.catalan(), 0).coeffs == (0,)


def test_series_mul_examples():
    x = TruncatedSeries((0, 1, 0, 0))
    assert series_mul(x, x).coeffs == (0, 0, 1, 0)
    ones = series_from_family(F.constant(1), 4)
    assert series_mul(ones, ones)[4] == 3
    a = TruncatedSeries((3, -1, 4, 1))
    assert a * TruncatedSeries.one(3) == a


def test_degree_mismatch():
    with pytest.raises(DomainError):
        series_mul(TruncatedSeries((1, 2)), TruncatedSeries((1, 2, 3)))


def test_coeff_of_power_examples():
    assert coeff_of_power(F.constant(1), 5, 2) == 4
    assert coeff_of_power(F.catalan(), 3, 0) == 0
    assert coeff_of_power(F.catalan(), 0, 0) == 1
    assert coeff_of_power(F.catalan_shifted(), 4, 2) == 5


def test_series_agrees_with_dp(family):
    for n in range(0, 21):
        for k in range(0, n + 1):
            assert coeff_of_power(family, n, k) == count_nk(family, n, k)
        if n:
            assert sum(coeff_of_power(family, n, k) for k in range(1, n + 1)) == count_total(family, n)


def test_power_by_squaring_matches_repeated_product():
    a = series_from_family(F.linear(2), 12)
    acc = TruncatedSeries.one(12)
    for k in range(0, 9):
        assert series_pow(a, k) == acc
        acc = series_mul(acc, a)


def test_weak_tuple_form_for_shifted_catalan():
    for n in range(1, 11):
        for k in range(1, n + 1):
            expected = sum(
                _prod(catalan(i) for i in t)
                for t in itertools.product(range(n - k + 1), repeat=k)
                if sum(t) == n - k
            )
            assert coeff_of_power(F.catalan_shifted(), n, k) == expected


def _prod(values):
    out = 1
    for v in values:
        out *= v
    return out


series = st.lists(st.integers(-50, 50), min_size=6, max_size=6).map(lambda c: TruncatedSeries(tuple(c)))


@given(series, series)
def test_mul_commutes(a, b):
    assert series_mul(a, b) == series_mul(b, a)


@given(series, series, series)
def test_mul_associates(a, b, c):
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
