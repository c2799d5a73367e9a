"""
The derivations D, D* and E on the coefficient ring, and their twisted variants
D - Y d/dX and D* - X d/dY on covariants.

Each derivation is fixed by its value on the variables; D, D* and E act the same way
on every active series.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from exact_poly import COV_X, COV_Y, Monomial, Polynomial, Variable, series_var
from exact_poly.polynomial import monomial_mul

from .context import FormContext

__all__ = [
    "derive_D",
    "derive_Dstar",
    "derive_E",
    "twisted_D",
    "twisted_Dstar",
    "iterate",
]

# Image of one variable: a list of (coefficient, monomial); empty or None means 0.
Image = List[Tuple[int, Monomial]]
ImageRule = Callable[[Variable], Optional[Image]]


def _apply(poly: Polynomial, rule: ImageRule) -> Polynomial:
    result: Dict[Monomial, Fraction] = {}
    cache: Dict[Variable, Optional[Image]] = {}
    for monomial, coefficient in poly.terms.items():
        for position, (variable, exponent) in enumerate(monomial):
            if variable not in cache:
                cache[variable] = rule(variable)
            image = cache[variable]
            if not image:
                continue
            if exponent > 1:
                rest: Monomial = monomial[:position] + ((variable, exponent - 1),) + monomial[position + 1:]
            else:
                rest = monomial[:position] + monomial[position + 1:]
            for factor, image_monomial in image:
                target = monomial_mul(rest, image_monomial)
                result[target] = result.get(target, 0) + coefficient * exponent * factor
    return Polynomial({m: c for m, c in result.items() if c != 0})


def _lowering(n: int) -> ImageRule:
    def rule(variable: Variable) -> Optional[Image]:
        if variable.is_series and variable.index > 0:
            return [(variable.index, ((series_var(variable.series, variable.index - 1), 1),))]
        return None
    return rule


def _raising(n: int) -> ImageRule:
    def rule(variable: Variable) -> Optional[Image]:
        if variable.is_series and variable.index < n:
            return [(n - variable.index, ((series_var(variable.series, variable.index + 1), 1),))]
        return None
    return rule


def _euler(n: int) -> ImageRule:
    def rule(variable: Variable) -> Optional[Image]:
        if variable.is_series and n - 2 * variable.index:
            return [(n - 2 * variable.index, ((variable, 1),))]
        return None
    return rule


def derive_D(p: Polynomial, ctx: FormContext) -> Polynomial:
    """D(s_i) = i * s_{i-1}."""
    ctx.check(p)
    return _apply(p, _lowering(ctx.order))


def derive_Dstar(p: Polynomial, ctx: FormContext) -> Polynomial:
    """D*(s_i) = (n - i) * s_{i+1}."""
    ctx.check(p)
    return _apply(p, _raising(ctx.order))


def derive_E(p: Polynomial, ctx: FormContext) -> Polynomial:
    """E(s_i) = (n - 2i) * s_i."""
    ctx.check(p)
    return _apply(p, _euler(ctx.order))


def twisted_D(p: Polynomial, ctx: FormContext) -> Polynomial:
    """D - Y d/dX, applied to a polynomial in the coefficients and X, Y."""
    ctx.check(p, allow_covariant=True)
    lowering = _lowering(ctx.order)

    def rule(variable: Variable) -> Optional[Image]:
        if variable == COV_X:
            return [(-1, ((COV_Y, 1),))]
        return lowering(variable)

    return _apply(p, rule)


def twisted_Dstar(p: Polynomial, ctx: FormContext) -> Polynomial:
    """D* - X d/dY."""
    ctx.check(p, allow_covariant=True)
    raising = _raising(ctx.order)

    def rule(variable: Variable) -> Optional[Image]:
        if variable == COV_Y:
            return [(-1, ((COV_X, 1),))]
        return raising(variable)

    return _apply(p, rule)


def iterate(derivation: Callable[[Polynomial, FormContext], Polynomial], p: Polynomial, ctx: FormContext, times: int) -> Polynomial:
    for _ in range(times):
        if p.is_zero():
            break
        p = derivation(p, ctx)
    return p
