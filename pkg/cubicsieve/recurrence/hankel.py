from __future__ import annotations

import logging
from math import lcm
from typing import List, Sequence

from ..errors import TableTooShortError, ZeroDeterminantError
from ..moments import MomentTable
from ..qfield import ONE, QS2, ZERO

logger = logging.getLogger(__name__)

Matrix = List[List[QS2]]


def hankel_matrix(moments: Sequence[QS2], size: int) -> Matrix:
    return [[moments[i + j] for j in range(size)] for i in range(size)]


def _require(table: MomentTable, n: int) -> None:
    if 2 * n > table.max_index:
        raise TableTooShortError(
            f"Delta_{n} needs mu_0..mu_{2 * n}, the {table.weight_id.value} table stops at mu_{table.max_index}"
        )


def bareiss_det(matrix: Matrix) -> QS2:
    """Fraction-free elimination with row swaps; exact over Q(sqrt 2)."""

    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) / prev
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def bareiss_minors(matrix: Matrix) -> List[QS2]:
    """All leading principal minors from one elimination pass.

    Without row swaps the k-th Bareiss pivot is the leading (k+1)x(k+1) minor,
    so the pass stops at the first vanishing minor.
    """

    m = [list(row) for row in matrix]
    n = len(m)
    minors: List[QS2] = []
    prev = ONE
    for k in range(n):
        pivot = m[k][k]
        if pivot.is_zero():
            raise ZeroDeterminantError(f"leading minor of order {k + 1} vanishes")
        minors.append(pivot)
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            if factor.is_zero():
                for j in range(k + 1, n):
                    if not row_i[j].is_zero():
                        row_i[j] = pivot * row_i[j] / prev
                continue
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) / prev
        prev = pivot
    return minors


def _scaled_minors(matrix: Matrix) -> List[QS2]:
    """Leading minors computed on the integral matrix D*M, then divided by D^(k+1)."""

    if not matrix:
        return []
    denominators = [1]
    for row in matrix:
        for entry in row:
            denominators.append(entry.rat_part.denominator)
            denominators.append(entry.sqrt2_part.denominator)
    scale = lcm(*denominators)
    scaled = [[entry * scale for entry in row] for row in matrix]
    minors = bareiss_minors(scaled)
    out: List[QS2] = []
    power = 1
    for minor in minors:
        power *= scale
        out.append(minor / power)
    return out


def leading_minors(table: MomentTable, n: int) -> List[QS2]:
    """Delta_0..Delta_n of the table's Hankel matrices.

    When every odd moment vanishes the Hankel matrix splits by index parity into
    (mu_{2i+2j}) and (mu_{2i+2j+2}); Delta_k is the product of their leading
    minors of orders k//2 + 1 and (k + 1)//2.
    """

    _require(table, n)
    moments = table.moments
    if any(not moments[k].is_zero() for k in range(1, 2 * n + 1, 2)):
        return _scaled_minors(hankel_matrix(moments, n + 1))

    even_block = [[moments[2 * i + 2 * j] for j in range(n // 2 + 1)] for i in range(n // 2 + 1)]
    odd_size = (n + 1) // 2
    odd_block = [[moments[2 * i + 2 * j + 2] for j in range(odd_size)] for i in range(odd_size)]
    even_minors = _scaled_minors(even_block)
    odd_minors = _scaled_minors(odd_block)
    deltas: List[QS2] = []
    for k in range(n + 1):
        value = even_minors[k // 2]
        odd_order = (k + 1) // 2
        if odd_order:
            value = value * odd_minors[odd_order - 1]
        deltas.append(value)
    logger.debug("leading minors of the %s table up to Delta_%d computed by parity split", table.weight_id.value, n)
    return deltas


def hankel_det(table: MomentTable, n: int) -> QS2:
    """Delta_n = det(mu_{i+j})_{i,j=0..n}; Delta_{-1} = 1."""

    if n == -1:
        return ONE
    if n < -1:
        raise ValueError("Hankel determinants start at Delta_-1")
    _require(table, n)
    return bareiss_det(hankel_matrix(table.moments, n + 1))


def cofactor_det(matrix: Matrix) -> QS2:
    """Laplace expansion along the first row; a brute-force oracle for small orders."""

    n = len(matrix)
    if n == 0:
        return ONE
    if n == 1:
        return matrix[0][0]
    total = ZERO
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
