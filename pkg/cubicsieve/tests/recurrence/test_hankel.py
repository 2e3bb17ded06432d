from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cubicsieve.errors import TableTooShortError, ZeroDeterminantError
from cubicsieve.moments import MomentTable, WeightId
from cubicsieve.qfield import ONE, QS2, SQRT2
from cubicsieve.recurrence import (
    bareiss_det,
    bareiss_minors,
    cofactor_det,
    hankel_det,
    hankel_matrix,
    leading_minors,
)

F = Fraction


def _random_matrix(rng: random.Random, n: int) -> list:
    return [
        [QS2(F(rng.randint(-6, 6), rng.randint(1, 4)), F(rng.randint(-3, 3), rng.randint(1, 3))) for _ in range(n)]
        for _ in range(n)
    ]


def test_q_ledger_determinants(table_q: MomentTable) -> None:
    assert hankel_det(table_q, -1) == ONE
    assert hankel_det(table_q, 0) == 2 * SQRT2
    assert hankel_det(table_q, 1) == F(7, 30)
    assert hankel_det(table_q, 2) == QS2(0, F(1, 4500))
    assert hankel_det(table_q, 3) == F(3187, 476756280000)


def test_leading_minors_agree_with_per_order_determinants(table_q: MomentTable, table_p: MomentTable) -> None:
    for table in (table_q, table_p):
        deltas = leading_minors(table, 8)
        assert len(deltas) == 9
        for n, delta in enumerate(deltas):
            assert delta == hankel_det(table, n)


def test_leading_minors_without_parity_split() -> None:
    table = MomentTable(weight_id=WeightId.P, moments=(QS2(2), QS2(1), QS2(3), QS2(1), QS2(7)))
    deltas = leading_minors(table, 2)
    matrix = hankel_matrix(table.moments, 3)
    assert deltas == [QS2(2), QS2(5), cofactor_det(matrix)]


def test_fraction_free_elimination_matches_cofactor_expansion() -> None:
    rng = random.Random(1234)
    for n in range(1, 7):
        for _ in range(5):
            matrix = _random_matrix(rng, n)
            assert bareiss_det(matrix) == cofactor_det(matrix)


def test_hankel_determinants_match_cofactor_expansion(table_p: MomentTable) -> None:
    for n in range(6):
        matrix = hankel_matrix(table_p.moments, n + 1)
        assert bareiss_det(matrix) == cofactor_det(matrix) == hankel_det(table_p, n)


def test_bareiss_handles_zero_pivots_by_swapping_rows() -> None:
    swap = [[QS2(0), QS2(1)], [QS2(1), QS2(0)]]
    assert bareiss_det(swap) == QS2(-1)
    singular = [[QS2(1), QS2(2)], [QS2(2), QS2(4)]]
    assert bareiss_det(singular) == 0
    assert bareiss_det([]) == ONE
    with pytest.raises(ZeroDeterminantError):
        bareiss_minors(swap)


def test_short_tables_are_rejected(table_q: MomentTable) -> None:
    short = table_q.truncated(2)
    with pytest.raises(TableTooShortError):
        hankel_det(short, 3)
    with pytest.raises(TableTooShortError):
        leading_minors(short, 3)
    with pytest.raises(ValueError):
        hankel_det(short, -2)


def test_all_q_determinants_are_positive(table_q: MomentTable) -> None:
    assert all(delta.sign() == 1 for delta in leading_minors(table_q, 20))
