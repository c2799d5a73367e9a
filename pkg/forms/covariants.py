"""
Covariants: the generic binary form, the XY-order, kappa and the transvectant.
"""
from __future__ import annotations

from typing import Dict

from error_handling import RangeError, ShapeError
from exact_poly import COV_X, COV_Y, Monomial, Polynomial, binomial, monomial_degree

from .context import FormContext

__all__ = ["generic_form", "order_xy", "kappa", "transvectant"]


def generic_form(ctx: FormContext, series: str = "a") -> Polynomial:
    """sum_i C(n, i) s_i X^(n-i) Y^i."""
    n = ctx.order
    total = Polynomial.zero()
    for i in range(n + 1):
        total = total + ctx.coefficient(series, i) * Polynomial.var(COV_X, n - i) * Polynomial.var(COV_Y, i) * binomial(n, i)
    return total


def order_xy(c: Polynomial) -> int:
    """Degree in X, Y of a covariant homogeneous in X, Y; ShapeError otherwise."""
    degrees = {monomial_degree(m, lambda v: v.is_covariant) for m in c.terms}
    if len(degrees) > 1:
        raise ShapeError(
            "polynomial is not homogeneous in X, Y",
            details={"xy_degrees": sorted(degrees)}
        )
    return degrees.pop() if degrees else 0


def kappa(c: Polynomial, ctx: FormContext) -> Polynomial:
    """Leading coefficient: the coefficient of X^m where m is the XY-order."""
    ctx.check(c, allow_covariant=True)
    m = order_xy(c)
    leading: Dict[Monomial, object] = {}
    for monomial, coefficient in c.terms.items():
        powers = dict(monomial)
        if powers.get(COV_X, 0) == m and COV_Y not in powers:
            powers.pop(COV_X, None)
            leading[tuple(sorted(powers.items()))] = coefficient
    return Polynomial(leading)


def _mixed_partial(p: Polynomial, x_times: int, y_times: int) -> Polynomial:
    for _ in range(x_times):
        p = p.partial(COV_X)
    for _ in range(y_times):
        p = p.partial(COV_Y)
    return p


def transvectant(f: Polynomial, g: Polynomial, r: int) -> Polynomial:
    """(f, g)^r = sum_i (-1)^i C(r, i) d^r f / dX^(r-i) dY^i * d^r g / dX^i dY^(r-i)."""
    if r < 0:
        raise RangeError(f"transvectant index must be >= 0, got {r}")
    bound = min(order_xy(f), order_xy(g))
    if r > bound:
        raise RangeError(
            f"transvectant index {r} exceeds min order {bound}",
            details={"r": r, "bound": bound}
        )
    total = Polynomial.zero()
    for i in range(r + 1):
        left = _mixed_partial(f, r - i, i)
        if left.is_zero():
            continue
        right = _mixed_partial(g, i, r - i)
        term = left * right * binomial(r, i)
        total = total - term if i % 2 else total + term
    return total
