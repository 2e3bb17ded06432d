"""
The cubic decomposition of P_n through T3 and U2, and the weight transfer between w_P and w_Q.
"""

from .decomposition import build_q_from_gamma, check_hypothesis, q_coefficients, verify_decomposition
from .models import IdentityRow, MappingReport, TransferPoint, TransferReport
from .transfer import midpoint_grid, weight_transfer_check

__all__ = [
    "IdentityRow",
    "MappingReport",
    "TransferPoint",
    "TransferReport",
    "build_q_from_gamma",
    "check_hypothesis",
    "midpoint_grid",
    "q_coefficients",
    "verify_decomposition",
    "weight_transfer_check",
]
