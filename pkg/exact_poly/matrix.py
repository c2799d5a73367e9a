"""
Determinants of square matrices with polynomial entries.

`det` runs fraction-free Bareiss elimination (every division is an exact polynomial
division) and falls back to cofactor expansion for matrices of size 4 or less.
"""
from __future__ import annotations

import logging
from typing import List, Sequence, Union

from error_handling import InexactDivisionError, ShapeError, debug_checks_enabled, trace_function

from .polynomial import Polynomial, Scalar

__all__ = ["Matrix", "det", "cofactor_det", "bareiss_det"]

logger = logging.getLogger("binform.exact_poly")

Matrix = Sequence[Sequence[Union[Polynomial, Scalar]]]

COFACTOR_LIMIT = 4
DEBUG_CROSS_CHECK_LIMIT = 5


def _normalize(matrix: Matrix) -> List[List[Polynomial]]:
    size = len(matrix)
    rows: List[List[Polynomial]] = []
    for row in matrix:
        if len(row) != size:
            raise ShapeError(
                f"determinant needs a square matrix, got a row of length {len(row)} in a {size}-row matrix",
                details={"rows": size, "row_length": len(row)}
            )
        rows.append([entry if isinstance(entry, Polynomial) else Polynomial.constant(entry) for entry in row])
    return rows


def cofactor_det(matrix: Matrix) -> Polynomial:
    """Laplace expansion along the first row."""
    return _cofactor(_normalize(matrix))


def _cofactor(rows: List[List[Polynomial]]) -> Polynomial:
    size = len(rows)
    if size == 0:
        return Polynomial.one()
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero()
    for column, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [row[:column] + row[column + 1:] for row in rows[1:]]
        term = entry * _cofactor(minor)
        total = total - term if column % 2 else total + term
    return total


def bareiss_det(matrix: Matrix) -> Polynomial:
    """Fraction-free elimination; a zero pivot is swapped with a lower nonzero row."""
    rows = _normalize(matrix)
    size = len(rows)
    if size == 0:
        return Polynomial.one()

    sign = 1
    previous = Polynomial.one()
    for k in range(size - 1):
        if rows[k][k].is_zero():
            for swap in range(k + 1, size):
                if not rows[swap][k].is_zero():
                    rows[k], rows[swap] = rows[swap], rows[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero()

        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                try:
                    rows[i][j] = numerator.exact_divide(previous)
                except InexactDivisionError as exc:
                    exc.details.update({"step": k, "row": i, "column": j})
                    raise
        previous = pivot

    result = rows[size - 1][size - 1]
    return -result if sign < 0 else result


@trace_function(name="exact_poly.det")
def det(matrix: Matrix) -> Polynomial:
    """Determinant of a square polynomial matrix (size 0 gives 1)."""
    size = len(matrix)
    if size <= COFACTOR_LIMIT:
        return cofactor_det(matrix)

    result = bareiss_det(matrix)
    if debug_checks_enabled() and size <= DEBUG_CROSS_CHECK_LIMIT:
        expected = cofactor_det(matrix)
        if expected != result:
            raise InexactDivisionError(
                "Bareiss and cofactor expansion disagree",
                details={"size": size}
            )
        logger.debug(f"det cross-check passed for a {size}x{size} matrix")
    return result
