"""
The printed closed expansions of the catalog constructions, built term by term.

Each builder sums exactly the printed double or triple sum. Terms whose integer
numerator vanishes are skipped before their denominator is looked at, so falling
factorials that die inside the printed range never cause a division by zero.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence, Tuple

from error_handling import RangeError, UsageError
from exact_poly import Polynomial, binomial, cofactor_det, falling_factorial as ff, multinomial, series_var

__all__ = [
    "closed_tr_single",
    "closed_ch_single",
    "closed_tr_joint2",
    "closed_tr_bar_joint2",
    "closed_tr_joint3",
    "closed_ch_joint4",
    "TR_BAR_VARIANTS",
]

TR_BAR_VARIANTS = ("printed", "printed_2n4", "corrected")


def _monomial(n: int, scalar: int, *factors: Tuple[str, int]) -> Polynomial:
    """scalar * prod s_k, or zero when scalar vanishes; indices must lie in 0..n otherwise."""
    if scalar == 0:
        return Polynomial.zero()
    powers = {}
    for series, index in factors:
        if not 0 <= index <= n:
            raise RangeError(f"closed formula references {series}{index} beyond order {n}")
        variable = series_var(series, index)
        powers[variable] = powers.get(variable, 0) + 1
    return Polynomial.term(scalar, powers)


def _add_term(total: Polynomial, numerator: Polynomial, coefficient: int, denominator: int, where: str) -> Polynomial:
    if numerator.is_zero() or coefficient == 0:
        return total
    if denominator == 0:
        raise RangeError(f"closed formula divides a nonvanishing term by zero ({where})")
    return total + numerator * Fraction(coefficient, denominator)


def _hessian_raised(n: int, i: int, series: str = "a") -> Polynomial:
    """sum_j C(i, j) ([n]_j s_j [n-2]_(i-j) s_(i-j+2) - [n-1]_(i-j) s_(i-j+1) [n-1]_j s_(j+1))."""
    s = series
    total = Polynomial.zero()
    for j in range(i + 1):
        det_entry = (
            _monomial(n, ff(n, j) * ff(n - 2, i - j), (s, j), (s, i - j + 2))
            - _monomial(n, ff(n - 1, i - j) * ff(n - 1, j), (s, i - j + 1), (s, j + 1))
        )
        total = total + det_entry * binomial(i, j)
    return total


def closed_tr_single(n: int) -> Polynomial:
    """Double-sum determinant expansion of the single-form Tr_n with denominators [2n-4]_i."""
    total = Polynomial.zero()
    for i in range(n + 1):
        lead = _monomial(n, 1, ("a", n - i))
        for j in range(i + 1):
            det_entry = (
                _monomial(n, ff(n, j) * ff(n - 2, i - j), ("a", j), ("a", i - j + 2))
                - _monomial(n, ff(n - 1, i - j) * ff(n - 1, j), ("a", i - j + 1), ("a", j + 1))
            )
            total = _add_term(
                total, lead * det_entry, (-1) ** i * binomial(n, i) * binomial(i, j), ff(2 * n - 4, i), f"i={i}, j={j}"
            )
    return total


def closed_ch_single(n: int) -> Polynomial:
    """Triple sum over (i, j, k) of determinant products, denominators [2n-4]_i [2n-4]_(n-i).

    The j- and k-sums are the two determinant-product factors; each is built once per i.
    """
    raised = [_hessian_raised(n, i) for i in range(n + 1)]
    total = Polynomial.zero()
    for i in range(n + 1):
        total = _add_term(
            total,
            raised[n - i] * raised[i],
            (-1) ** i * binomial(n, i),
            ff(2 * n - 4, i) * ff(2 * n - 4, n - i),
            f"i={i}"
        )
    return total


def closed_tr_joint2(n: int) -> Polynomial:
    """Double sum for Tr_n(a0, b0) with denominators [2n-2]_i."""
    total = Polynomial.zero()
    for i in range(n + 1):
        lead = _monomial(n, 1, ("a", n - i))
        for j in range(i + 1):
            det_entry = (
                _monomial(n, ff(n, j) * ff(n - 1, i - j), ("a", j), ("b", i - j + 1))
                - _monomial(n, ff(n, i - j) * ff(n - 1, j), ("b", i - j), ("a", j + 1))
            )
            total = _add_term(
                total, lead * det_entry, (-1) ** i * binomial(n, i) * binomial(i, j), ff(2 * n - 2, i), f"i={i}, j={j}"
            )
    return total


def _tr_bar_entry(n: int, i: int, j: int, index: int) -> Polynomial:
    """A_(i,j); `index` is the running index of the a-factors (i as printed, j when corrected)."""
    k = i - j
    return (
        _monomial(n, ff(n, index) * ff(n - 2, k), ("a", index), ("b", k + 2))
        - _monomial(n, 2 * ff(n - 1, index) * ff(n - 1, k), ("a", index + 1), ("b", k + 1))
        + _monomial(n, ff(n - 2, index) * ff(n, k), ("a", index + 2), ("b", k))
    )


def closed_tr_bar_joint2(n: int, variant: str = "printed") -> Polynomial:
    """Closed sum for T-bar_n(a0, b0).

    Variants:
        printed: A_(i,j) indexed by i, denominators [2n-2]_i
        printed_2n4: A_(i,j) indexed by i, denominators [2n-4]_i
        corrected: A_(i,j) indexed by j, denominators [2n-4]_i
    """
    if variant not in TR_BAR_VARIANTS:
        raise UsageError(f"unknown variant {variant!r}; expected one of {', '.join(TR_BAR_VARIANTS)}")
    total = Polynomial.zero()
    for i in range(n + 1):
        lead = _monomial(n, 1, ("a", n - i))
        denominator = ff(2 * n - 2, i) if variant == "printed" else ff(2 * n - 4, i)
        for j in range(i + 1):
            entry = _tr_bar_entry(n, i, j, j if variant == "corrected" else i)
            total = _add_term(
                total, lead * entry, (-1) ** i * binomial(n, i) * binomial(i, j), denominator, f"i={i}, j={j}"
            )
    return total


def closed_tr_joint3(n: int, series: Sequence[str] = ("a", "b", "c")) -> Polynomial:
    """Double sum for Tr_n(a0, b0, c0) with denominators [2n-2]_i."""
    a, b, c = series
    total = Polynomial.zero()
    for i in range(n + 1):
        lead = _monomial(n, 1, (a, n - i))
        for j in range(i + 1):
            scalar = ff(n, j) * ff(n - 1, i - j)
            det_entry = _monomial(n, scalar, (b, j), (c, i - j + 1)) - _monomial(n, scalar, (c, j), (b, i - j + 1))
            total = _add_term(
                total, lead * det_entry, (-1) ** i * binomial(n, i) * binomial(i, j), ff(2 * n - 2, i), f"i={i}, j={j}"
            )
    return total


def _raised_delta(n: int, parts: Tuple[int, int, int], series: Sequence[str]) -> Polynomial:
    rows = [
        [_monomial(n, ff(n - row, part), (s, part + row)) for part, s in zip(parts, series)]
        for row in range(3)
    ]
    return cofactor_det(rows)


def closed_ch_joint4(n: int) -> Polynomial:
    """Sum over i and compositions i1 + i2 + i3 = i of multinomial-weighted 3x3 determinants,
    denominators [3n-6]_i."""
    total = Polynomial.zero()
    for i in range(n + 1):
        lead = _monomial(n, 1, ("a", n - i))
        inner = Polynomial.zero()
        for i1, i2 in cartesian(range(i + 1), repeat=2):
            i3 = i - i1 - i2
            if i3 < 0:
                continue
            inner = inner + _raised_delta(n, (i1, i2, i3), ("b", "c", "d")) * multinomial(i1, i2, i3)
        total = _add_term(total, lead * inner, (-1) ** i * binomial(n, i), ff(3 * n - 6, i), f"i={i}")
    return total
