"""
Exact scalars: rationals and the quadratic field Q(sqrt 2).
"""

from .qs2 import ONE, QS2, SQRT2, ZERO, as_qs2, qs2_add, qs2_inv, qs2_is_rational, qs2_mul, qs2_sign
from .rational import Rat, format_rat, parse_rat, to_rat

__all__ = [
    "ONE",
    "QS2",
    "Rat",
    "SQRT2",
    "ZERO",
    "as_qs2",
    "format_rat",
    "parse_rat",
    "qs2_add",
    "qs2_inv",
    "qs2_is_rational",
    "qs2_mul",
    "qs2_sign",
    "to_rat",
]
