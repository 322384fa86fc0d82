import json

import pytest

from colorcomp import CapExceededError, ColorFamily, ColoredComposition, MatrixComposition
from colorcomp import count_colored, count_total, count_nk, enumerate_colored, enumerate_matrix
from colorcomp.enumeration import compositions, weak_catalan_tuple_sum

F = ColorFamily


def test_ordinary_compositions_of_three():
    items = list(enumerate_colored(F.constant(1), 3))
    assert [tuple(p for p, _ in c.parts) for c in items] == [(3,), (1, 2), (2, 1), (1, 1, 1)]


def test_empty_composition():
    for fam in (F.constant(1), F.catalan(), F.custom([0, 0])):
        assert [c.parts for c in enumerate_colored(fam, 0)] == [()]
        assert count_colored(fam, 0) == 1


def test_catalan_single_part():
    items = list(enumerate_colored(F.catalan(), 3, 1))
    assert [c.parts for c in items] == [((3, c),) for c in range(1, 6)]


def test_count_colored_examples():
    assert count_colored(F.catalan(), 3) == 10
    assert count_colored(F.exponential(2), 3) == 9
    assert count_colored(F.constant_shifted(1, 2), 6, 2) == 3
    parts = {tuple(p for p, _ in c.parts) for c in enumerate_colored(F.constant_shifted(1, 2), 6, 2)}
    assert parts == {(2, 4), (4, 2), (3, 3)}


def test_enumeration_agrees_with_dp(family):
    for n in range(0, 9):
        assert count_colored(family, n) == count_total(family, n)
        for k in range(0, n + 1):
            assert count_colored(family, n, k) == count_nk(family, n, k)


def test_items_valid_unique_and_ordered(family):
    for n in range(0, 7):
        items = list(enumerate_colored(family, n))
        assert all(c.is_valid(family, n) for c in items)
        assert len(set(items)) == len(items) == count_total(family, n)
        keys = [(c.k, tuple(p for p, _ in c.parts), tuple(col for _, col in c.parts)) for c in items]
        assert keys == sorted(keys)


def test_compositions_counts():
    for n in range(1, 12):
        assert len(list(compositions(n))) == 2 ** (n - 1)


def test_json_lines_round_trip():
    for c in enumerate_colored(F.catalan(), 4):
        line = json.dumps(c.to_json())
        assert ColoredComposition.from_json(json.loads(line)) == c
    for m in enumerate_matrix(2, 3):
        assert MatrixComposition.from_json(json.loads(json.dumps(m.to_json()))) == m


def test_matrix_examples():
    mats = list(enumerate_matrix(2, 2))
    assert len(mats) == 7
    assert sum(1 for m in mats if len(m.columns) == 1) == 3
    assert len(list(enumerate_matrix(1, 3))) == 4
    for rows in (1, 2, 5):
        assert [m.columns for m in enumerate_matrix(rows, 0)] == [()]


@pytest.mark.parametrize("rows", [1, 2, 3])
def test_matrix_counts_match_family(rows):
    for n in range(0, 8):
        mats = list(enumerate_matrix(rows, n))
        assert all(m.is_valid(n) for m in mats)
        assert len({m.columns for m in mats}) == len(mats) == count_total(F.matrix(rows), n)


def test_matrix_order_is_lexicographic():
    mats = [m.columns for m in enumerate_matrix(3, 4)]
    assert mats == sorted(mats)


def test_caps(monkeypatch):
    with pytest.raises(CapExceededError):
        enumerate_colored(F.constant(1), 26)
    with pytest.raises(CapExceededError):
        count_colored(F.constant(1), 26)
    monkeypatch.setenv("COLORCOMP_ENUM_CAP", "100")
    with pytest.raises(CapExceededError) as info:
        enumerate_colored(F.constant(2), 6)
    assert info.value.estimate == count_total(F.constant(2), 6)
    with pytest.raises(CapExceededError):
        enumerate_matrix(3, 5)
    assert len(list(enumerate_colored(F.constant(1), 6))) == 32


def test_weak_catalan_tuple_sum_small():
    assert weak_catalan_tuple_sum(2, 2) == 5
    assert weak_catalan_tuple_sum(1, 2) == 2
    assert weak_catalan_tuple_sum(0, 4) == 1
