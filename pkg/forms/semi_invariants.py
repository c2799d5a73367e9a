"""
Certified semi-invariants and the semi-transvectant.

A SemiInvariant is only ever built through `SemiInvariant.certify`, which checks
D(poly) = 0 and records degree, weight, order and properness. Constructions that
vanish identically still carry their nominal degree and weight.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from error_handling import ContextError, PreconditionError, RangeError
from exact_poly import COV_X, COV_Y, Polynomial, binomial, factorial, falling_factorial, format_polynomial, proportionality

from .classification import homogeneous_degree, is_proper, weight
from .context import FormContext
from .covariants import kappa, transvectant
from .derivations import derive_D, derive_Dstar

__all__ = [
    "SemiInvariant",
    "seed",
    "kappa_inv",
    "semi_transvectant",
    "transvectant_scale",
]

logger = logging.getLogger("binform.forms")


@dataclass(frozen=True)
class SemiInvariant:
    poly: Polynomial
    context: FormContext
    degree: int
    weight: int
    order: int
    proper: bool

    @classmethod
    def certify(
        cls,
        poly: Polynomial,
        ctx: FormContext,
        degree: Optional[int] = None,
        weight_hint: Optional[int] = None
    ) -> "SemiInvariant":
        """Check D(poly) = 0, homogeneity and isobarity, then record the invariants.

        Args:
            poly: Candidate polynomial in the coefficients of ctx
            ctx: Form context
            degree: Nominal degree, required when poly is zero and checked otherwise
            weight_hint: Nominal weight, same rules as degree

        Returns:
            The certified semi-invariant
        """
        ctx.check(poly)
        if poly.is_zero():
            if degree is None or weight_hint is None:
                raise PreconditionError("a vanishing construction needs its nominal degree and weight")
            return cls(poly, ctx, degree, weight_hint, max(weight_hint, 0), False)

        if not derive_D(poly, ctx).is_zero():
            raise PreconditionError(
                "not a semi-invariant: D(p) != 0",
                details={"polynomial": format_polynomial(poly)}
            )
        actual_degree = homogeneous_degree(poly)
        actual_weight = weight(poly, ctx)
        if actual_degree is None or actual_weight is None:
            raise PreconditionError(
                "semi-invariants are kept homogeneous and isobaric",
                details={"homogeneous": actual_degree is not None, "isobaric": actual_weight is not None}
            )
        if degree is not None and degree != actual_degree:
            raise PreconditionError(f"expected degree {degree}, found {actual_degree}")
        if weight_hint is not None and weight_hint != actual_weight:
            raise PreconditionError(f"expected weight {weight_hint}, found {actual_weight}")
        return cls(poly, ctx, actual_degree, actual_weight, actual_weight, is_proper(poly, ctx))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def scale(self, factor) -> "SemiInvariant":
        return SemiInvariant.certify(self.poly.scale(factor), self.context, self.degree, self.weight)

    def __str__(self) -> str:
        return format_polynomial(self.poly)


def seed(ctx: FormContext, series: str = "a") -> SemiInvariant:
    """The leading coefficient s0 of a generic form, weight n."""
    return SemiInvariant.certify(ctx.coefficient(series, 0), ctx)


def _raised(s: SemiInvariant, times: int) -> List[Polynomial]:
    """[s, D*(s), ..., (D*)^times(s)]."""
    powers = [s.poly]
    for _ in range(times):
        powers.append(derive_Dstar(powers[-1], s.context) if not powers[-1].is_zero() else powers[-1])
    return powers


def kappa_inv(s: SemiInvariant) -> Polynomial:
    """sum_i (D*)^i(s) / i! * X^(ord - i) Y^i."""
    order = s.order
    total = Polynomial.zero()
    for i, raised in enumerate(_raised(s, order)):
        if raised.is_zero():
            break
        total = total + raised * Polynomial.var(COV_X, order - i) * Polynomial.var(COV_Y, i) * Fraction(1, factorial(i))
    return total


def _joint_context(p: SemiInvariant, q: SemiInvariant) -> FormContext:
    if p.context.order != q.context.order:
        raise ContextError(
            f"forms of unequal orders ({p.context.order} and {q.context.order}) cannot be combined"
        )
    return p.context.with_series(q.context.active_series)


def semi_transvectant(p: SemiInvariant, q: SemiInvariant, r: int) -> SemiInvariant:
    """[p, q]^r = sum_i (-1)^i C(r, i) (D*)^i(p) / [ord p]_i * (D*)^(r-i)(q) / [ord q]_(r-i)."""
    ctx = _joint_context(p, q)
    if r < 0:
        raise RangeError(f"semi-transvectant index must be >= 0, got {r}")
    if r > min(p.order, q.order):
        raise RangeError(
            f"semi-transvectant index {r} exceeds min(ord p, ord q) = {min(p.order, q.order)}",
            details={"r": r, "ord_p": p.order, "ord_q": q.order}
        )

    p_raised = _raised(p, r)
    q_raised = _raised(q, r)
    total = Polynomial.zero()
    for i in range(r + 1):
        left, right = p_raised[i], q_raised[r - i]
        if left.is_zero() or right.is_zero():
            continue
        factor = Fraction(
            (-1) ** i * binomial(r, i),
            falling_factorial(p.order, i) * falling_factorial(q.order, r - i)
        )
        total = total + left * right * factor

    return SemiInvariant.certify(
        total,
        ctx,
        degree=p.degree + q.degree,
        weight_hint=p.weight + q.weight - 2 * r
    )


def transvectant_scale(p: SemiInvariant, q: SemiInvariant, r: int) -> Optional[Fraction]:
    """The rational c with kappa((kappa_inv p, kappa_inv q)^r) = c [p, q]^r, or None."""
    ctx = _joint_context(p, q)
    via_covariants = kappa(transvectant(kappa_inv(p), kappa_inv(q), r), ctx)
    direct = semi_transvectant(p, q, r).poly
    ratio = proportionality(via_covariants, direct)
    logger.debug(
        f"transvectant scale r={r}: ratio {ratio}, "
        f"[ord p]_r [ord q]_r = {falling_factorial(p.order, r) * falling_factorial(q.order, r)}"
    )
    return ratio
