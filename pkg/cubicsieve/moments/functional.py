from __future__ import annotations

import logging
import time
from typing import List

from ..errors import TableTooShortError
from ..polyalg import Poly
from ..qfield import QS2, ZERO
from .closed_form import moment_P, moment_Q
from .models import MomentTable, WeightId, WeightSpec

logger = logging.getLogger(__name__)


def moment_table(weight: WeightSpec | WeightId | str, count: int) -> MomentTable:
    """mu_0..mu_{2*count} of the chosen weight."""

    spec = weight if isinstance(weight, WeightSpec) else WeightSpec.of(weight)
    if count < 0:
        raise ValueError("moment table count must be non-negative")

    started = time.perf_counter()
    moment = moment_P if spec.weight_id is WeightId.P else moment_Q
    moments: List[QS2] = [moment(k) for k in range(2 * count + 1)]

    logger.info(
        "built %s moment table to mu_%d in %.3fs",
        spec.weight_id.value,
        2 * count,
        time.perf_counter() - started,
    )
    return MomentTable(weight_id=spec.weight_id, moments=tuple(moments))


def apply_functional(p: Poly, table: MomentTable) -> QS2:
    """L[p] = sum_k coeff_k(p) * mu_k."""

    if p.degree > table.max_index:
        raise TableTooShortError(
            f"degree {p.degree} needs mu_{p.degree}, the {table.weight_id.value} table stops at mu_{table.max_index}"
        )
    total = ZERO
    for c, mu in zip(p.coeffs, table.moments):
        if c.is_zero() or mu.is_zero():
            continue
        total = total + c * mu
    return total


def inner_product(p: Poly, q: Poly, table: MomentTable) -> QS2:
    if p.is_zero() or q.is_zero():
        return ZERO
    if p.degree + q.degree > table.max_index:
        raise TableTooShortError(
            f"<p, q> needs mu_{p.degree + q.degree}, the {table.weight_id.value} table stops at mu_{table.max_index}"
        )
    return apply_functional(p * q, table)
