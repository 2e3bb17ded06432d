from __future__ import annotations

from cubicsieve.numeric import (
    cos_form_sweep,
    dual_form_sweep,
    evenness_sweep,
    grid_minimum,
    moment_agreement,
    symmetric_grid,
    theta_grid,
    triple_angle_sweep,
)


def test_grids() -> None:
    assert len(theta_grid(10)) == 10
    grid = symmetric_grid(5)
    assert grid[2] == 0
    assert grid[0] == -grid[-1]


def test_closed_forms_agree_on_a_thousand_points() -> None:
    dual = dual_form_sweep(1000, 1e-12)
    assert dual.passed
    assert dual.points == 1000
    assert cos_form_sweep(1000, 1e-12).passed


def test_triple_angle_and_evenness() -> None:
    assert triple_angle_sweep(500, 1e-10).passed
    assert evenness_sweep(500, 1e-13).passed


def test_minimum_of_w_is_four_at_the_center() -> None:
    result = grid_minimum(10001, 1e-9)
    assert result.passed
    assert result.detail is not None
    assert "min 4.0 at x = 0.0" == result.detail


def test_exact_and_numeric_moments_agree() -> None:
    for weight in ("P", "Q"):
        result = moment_agreement(weight, 12, 1e-10)
        assert result.passed, result.max_error
        assert result.points == 13
