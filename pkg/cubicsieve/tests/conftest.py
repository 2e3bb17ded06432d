from __future__ import annotations

from fractions import Fraction
from typing import List

import pytest

from cubicsieve.moments import MomentTable, moment_table

F = Fraction

# gamma_0..gamma_11, index-aligned
PINNED_GAMMA: List[Fraction] = [
    F(0),
    F(1, 2),
    F(1, 4),
    F(7, 30),
    F(4, 15),
    F(1, 4),
    F(12, 49),
    F(25, 98),
    F(1, 4),
    F(3187, 12870),
    F(1624, 6435),
    F(1, 4),
]


@pytest.fixture
def pinned_gamma() -> List[Fraction]:
    return list(PINNED_GAMMA)


@pytest.fixture(scope="session")
def table_p() -> MomentTable:
    return moment_table("P", 64)


@pytest.fixture(scope="session")
def table_q() -> MomentTable:
    return moment_table("Q", 20)
