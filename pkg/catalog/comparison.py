"""
Machine-readable comparison of a normative polynomial against a candidate.
"""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel

from exact_poly import Polynomial, format_rational, monomial_key, proportionality

__all__ = ["FirstDifference", "ComparisonVerdict", "compare"]


class FirstDifference(BaseModel):
    monomial: str
    normative: str
    candidate: str


class ComparisonVerdict(BaseModel):
    equal: bool
    proportional: bool
    ratio: Optional[str] = None
    first_difference: Optional[FirstDifference] = None

    def summary(self) -> str:
        if self.equal:
            return "equal"
        if self.proportional:
            return f"proportional (candidate = {self.ratio} * normative)"
        diff = self.first_difference
        return f"differs at {diff.monomial}: {diff.normative} vs {diff.candidate}"


def _monomial_text(monomial) -> str:
    return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in monomial) or "1"


def compare(normative: Polynomial, candidate: Polynomial) -> ComparisonVerdict:
    """Equality, proportionality (candidate = ratio * normative) and the first differing monomial."""
    equal = normative == candidate
    ratio = proportionality(candidate, normative)
    first_difference = None
    if not equal:
        monomials = sorted(set(normative.terms) | set(candidate.terms), key=monomial_key, reverse=True)
        for monomial in monomials:
            left, right = normative.coefficient(monomial), candidate.coefficient(monomial)
            if left != right:
                first_difference = FirstDifference(
                    monomial=_monomial_text(monomial),
                    normative=format_rational(left),
                    candidate=format_rational(right),
                )
                break
    return ComparisonVerdict(
        equal=equal,
        proportional=equal or (ratio is not None and ratio != 0),
        ratio=format_rational(ratio) if ratio is not None else None,
        first_difference=first_difference,
    )
