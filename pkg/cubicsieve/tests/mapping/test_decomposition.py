from __future__ import annotations

from fractions import Fraction

import pytest

from cubicsieve.errors import HypothesisViolation, InsufficientGammaError
from cubicsieve.mapping import build_q_from_gamma, check_hypothesis, q_coefficients, verify_decomposition
from cubicsieve.moments import MomentTable, inner_product
from cubicsieve.polyalg import T3_HAT, Poly, recurrence_polys
from cubicsieve.recurrence import gamma_direct, s_sequence

F = Fraction
X = Poly.x()


def test_q_sequence_from_gamma(pinned_gamma: list) -> None:
    q = build_q_from_gamma(pinned_gamma, 3)
    assert q[0] == Poly.constant(1)
    assert q[1] == X
    assert q[2] == Poly([F(-7, 240), 0, 1])
    assert q_coefficients(pinned_gamma, 3) == [F(0), F(7, 240), F(4, 245), F(15935, 1009008)]
    assert all(p.is_monic() for p in q)


def test_q_sequence_needs_enough_gamma(pinned_gamma: list) -> None:
    with pytest.raises(InsufficientGammaError):
        q_coefficients(pinned_gamma, 4)
    assert len(build_q_from_gamma(pinned_gamma, 0)) == 1


def test_decomposition_with_pinned_gamma(pinned_gamma: list) -> None:
    report = verify_decomposition(pinned_gamma, 3)
    assert report.passed
    assert len(report.identity_rows()) == 9
    assert len(report.rows) == 12
    assert all(row.first_bad_coeff is None for row in report.rows)
    assert recurrence_polys(pinned_gamma, 3)[3] == T3_HAT

    row = report.rows[0].model_dump(by_alias=True)
    assert row == {"n": 0, "identity": "P3n", "pass": True, "first_bad_coeff": None}


def test_hypothesis_violation(pinned_gamma: list) -> None:
    broken = list(pinned_gamma)
    broken[5] = F(1, 3)
    with pytest.raises(HypothesisViolation):
        verify_decomposition(broken, 3)
    shifted = list(pinned_gamma)
    shifted[6] = shifted[6] + F(1, 100)
    with pytest.raises(HypothesisViolation):
        check_hypothesis(shifted)


def test_decomposition_needs_enough_gamma(pinned_gamma: list) -> None:
    with pytest.raises(InsufficientGammaError):
        verify_decomposition(pinned_gamma[:6], 3)
    with pytest.raises(ValueError):
        verify_decomposition(pinned_gamma, 0)


def test_decomposition_up_to_degree_sixty_two(table_p: MomentTable) -> None:
    gamma = gamma_direct(table_p, 62)
    report = verify_decomposition(gamma, 21)
    assert report.passed
    assert max(row.n for row in report.rows) == 20
    assert len(report.identity_rows()) == 63


def test_q_sequence_to_depth_twenty_matches_the_q_functional(table_p: MomentTable, table_q: MomentTable) -> None:
    gamma = gamma_direct(table_p, 62)
    s = q_coefficients(gamma, 20)
    assert s == s_sequence(table_q, 20)

    q = build_q_from_gamma(gamma, 20)
    assert len(q) == 21
    assert [p.degree for p in q] == list(range(21))
    norms = [inner_product(qn, qn, table_q) for qn in q]
    for n in range(1, 21):
        assert norms[n] == norms[n - 1] * s[n]
        assert inner_product(q[n], q[n - 1], table_q).is_zero()
        assert inner_product(q[n], q[0], table_q).is_zero()
