"""
High-precision floating oracle built on mpmath: the closed forms of the weights,
quadrature in the angle variable and the orthogonality residuals.
"""

from .checks import (
    cos_form_sweep,
    dual_form_sweep,
    evenness_sweep,
    grid_minimum,
    moment_agreement,
    symmetric_grid,
    theta_grid,
    triple_angle_sweep,
)
from .models import OrthogonalityReport, OrthogonalityRow, SweepResult, WeightsReport
from .orthogonality import norm_products, orthogonality_residual, orthogonality_sweep
from .quadrature import QuadResult, oracle_moment, quad, quad_theta
from .weights import (
    DEFAULT_DPS,
    eval_w,
    eval_w_cos_form,
    eval_w_P,
    eval_w_Q,
    eval_w_secant_form,
    triple_angle_rhs,
    wp_theta,
    wq_theta,
)

__all__ = [
    "DEFAULT_DPS",
    "OrthogonalityReport",
    "OrthogonalityRow",
    "QuadResult",
    "SweepResult",
    "WeightsReport",
    "cos_form_sweep",
    "dual_form_sweep",
    "eval_w",
    "eval_w_P",
    "eval_w_Q",
    "eval_w_cos_form",
    "eval_w_secant_form",
    "evenness_sweep",
    "grid_minimum",
    "moment_agreement",
    "norm_products",
    "oracle_moment",
    "orthogonality_residual",
    "orthogonality_sweep",
    "quad",
    "quad_theta",
    "symmetric_grid",
    "theta_grid",
    "triple_angle_sweep",
    "wp_theta",
    "wq_theta",
]
