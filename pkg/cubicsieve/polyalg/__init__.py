"""
Dense polynomial algebra over Q(sqrt 2), Chebyshev generators and the three-term recurrence.
"""

from .chebyshev import T3_HAT, U2_HAT, cheb_t_monic, cheb_u_monic, recurrence_polys
from .poly import (
    Poly,
    poly_add,
    poly_compose,
    poly_divrem,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_pow,
    poly_scale,
    poly_sub,
)

__all__ = [
    "Poly",
    "T3_HAT",
    "U2_HAT",
    "cheb_t_monic",
    "cheb_u_monic",
    "poly_add",
    "poly_compose",
    "poly_divrem",
    "poly_eval",
    "poly_mul",
    "poly_neg",
    "poly_pow",
    "poly_scale",
    "poly_sub",
    "recurrence_polys",
]
