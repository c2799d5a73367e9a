"""
Degree, weight and order of coefficient polynomials, and the membership predicates
for semi-invariants, invariants and covariants.
"""
from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel

from error_handling import PreconditionError, debug_checks_enabled
from exact_poly import Polynomial, format_polynomial, monomial_degree

from .context import FormContext
from .derivations import derive_D, derive_Dstar, twisted_D, twisted_Dstar

__all__ = [
    "homogeneous_degree",
    "weight",
    "is_isobaric",
    "printed_weight",
    "order_of",
    "ord",
    "is_semi_invariant",
    "is_invariant",
    "is_covariant",
    "is_proper",
    "Classification",
    "classify",
]

logger = logging.getLogger("binform.forms")


def _monomial_weight(monomial, n: int) -> int:
    return sum(e * (n - 2 * v.index) for v, e in monomial if v.is_series)


def _has_covariant_variables(p: Polynomial) -> bool:
    return any(not v.is_series for v in p.variables())


def homogeneous_degree(p: Polynomial) -> Optional[int]:
    """Common degree in the series coefficients, or None when p is not homogeneous."""
    degrees = {monomial_degree(m, lambda v: v.is_series) for m in p.terms}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def weight(p: Polynomial, ctx: FormContext) -> Optional[int]:
    """E-eigenvalue of p, i.e. the common sum k_i(n - 2i) over monomials; None if not isobaric."""
    ctx.check(p)
    if p.is_zero():
        raise PreconditionError("the zero polynomial has no weight")
    weights = {_monomial_weight(m, ctx.order) for m in p.terms}
    if len(weights) != 1:
        return None
    value = weights.pop()
    if logger.isEnabledFor(logging.DEBUG):
        printed = printed_weight(p, ctx)
        logger.debug(f"weight: E-eigenvalue {value}, printed formula {printed}")
    return value


def is_isobaric(p: Polynomial, ctx: FormContext) -> bool:
    return not p.is_zero() and weight(p, ctx) is not None


def printed_weight(p: Polynomial, ctx: FormContext) -> Optional[int]:
    """n(k0 + ... + kn) - 2(k1 + ... + kn) per monomial, the formula as it is usually printed.

    This disagrees with the E-eigenvalue except in degenerate cases; it is kept for
    diagnostics only.
    """
    ctx.check(p)
    values = set()
    for monomial in p.terms:
        total = sum(e for v, e in monomial if v.is_series)
        shifted = sum(e for v, e in monomial if v.is_series and v.index >= 1)
        values.add(ctx.order * total - 2 * shifted)
    return values.pop() if len(values) == 1 else None


def is_semi_invariant(p: Polynomial, ctx: FormContext) -> bool:
    if _has_covariant_variables(p):
        return False
    return derive_D(p, ctx).is_zero()


def is_invariant(p: Polynomial, ctx: FormContext) -> bool:
    if _has_covariant_variables(p):
        return False
    return derive_D(p, ctx).is_zero() and derive_Dstar(p, ctx).is_zero()


def is_covariant(p: Polynomial, ctx: FormContext) -> bool:
    return twisted_D(p, ctx).is_zero() and twisted_Dstar(p, ctx).is_zero()


def is_proper(p: Polynomial, ctx: FormContext) -> bool:
    """Some active series' last coefficient s_n occurs in p."""
    ctx.check(p, allow_covariant=True)
    last = {v for s in ctx.active_series for v in ctx.coefficients(s)[-1:]}
    return any(v in last for v in p.variables())


def _iterated_order(s: Polynomial, ctx: FormContext) -> int:
    order = 0
    current = derive_Dstar(s, ctx)
    while not current.is_zero():
        order += 1
        current = derive_Dstar(current, ctx)
    return order


def order_of(s: Polynomial, ctx: FormContext) -> int:
    """ord(s) = max{k : (D*)^k(s) != 0} for a nonzero semi-invariant s."""
    ctx.check(s)
    if s.is_zero():
        raise PreconditionError("ord is undefined for the zero polynomial")
    if not derive_D(s, ctx).is_zero():
        raise PreconditionError(
            "ord needs a semi-invariant, but D(s) != 0",
            details={"polynomial": format_polynomial(s)}
        )
    degree = homogeneous_degree(s)
    value = weight(s, ctx)
    if degree is None or value is None:
        return _iterated_order(s, ctx)
    if debug_checks_enabled():
        iterated = _iterated_order(s, ctx)
        logger.debug(f"ord cross-check: weight {value}, iterated D* {iterated}")
        if iterated != value:
            raise PreconditionError(
                f"ord mismatch: weight {value} but iterated D* gives {iterated}",
                details={"polynomial": format_polynomial(s)}
            )
    return value


ord = order_of


class Classification(BaseModel):
    semi_invariant: bool
    invariant: bool
    covariant: bool
    homogeneous: bool
    degree: Optional[int] = None
    isobaric: bool
    weight: Optional[int] = None
    printed_weight: Optional[int] = None
    order: Optional[int] = None
    proper: bool
    d_image: Optional[str] = None


def classify(p: Polynomial, ctx: FormContext) -> Classification:
    """Everything the predicates know about p; the D-image is attached when p is not a semi-invariant."""
    ctx.check(p, allow_covariant=True)
    coefficient_only = not _has_covariant_variables(p)
    degree = homogeneous_degree(p) if not p.is_zero() else None
    semi = coefficient_only and is_semi_invariant(p, ctx)
    w = weight(p, ctx) if coefficient_only and not p.is_zero() else None

    d_image = None
    if coefficient_only and not semi:
        d_image = format_polynomial(derive_D(p, ctx))

    return Classification(
        semi_invariant=semi,
        invariant=coefficient_only and is_invariant(p, ctx),
        covariant=is_covariant(p, ctx),
        homogeneous=degree is not None,
        degree=degree,
        isobaric=w is not None,
        weight=w,
        printed_weight=printed_weight(p, ctx) if coefficient_only and not p.is_zero() else None,
        order=order_of(p, ctx) if semi and not p.is_zero() else None,
        proper=is_proper(p, ctx),
        d_image=d_image,
    )
