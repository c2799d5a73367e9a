"""
Conjectured closed forms for norms, evaluated exactly and as printed.

Suspected typo variants are reported only in the auxiliary columns.
"""
from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from math import prod
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from error_handling import RangeError, UsageError, trace_function
from exact_poly import format_rational
from catalog import discr_literal, dv, discr

from .families import FamilyName, get_family
from .homomorphism import parse_assignment
from .identities import verify_identity

__all__ = ["ConjectureName", "ConjectureRow", "conjecture_check", "CONJECTURE_MIN_ORDER", "parse_conjecture"]

logger = logging.getLogger("binform.appell")


class ConjectureName(str, Enum):
    EULER_DV = "euler-dv"
    HERMITE_DISCR = "hermite-discr"
    BE_DV = "be-dv"


CONJECTURE_MIN_ORDER: Dict[ConjectureName, int] = {
    ConjectureName.EULER_DV: 1,
    ConjectureName.HERMITE_DISCR: 2,
    ConjectureName.BE_DV: 1,
}


class ConjectureRow(BaseModel):
    name: str
    n: int
    lhs: str
    rhs: str
    match: bool
    lhs_constant: bool = True
    auxiliary_label: Optional[str] = None
    auxiliary_rhs: Optional[str] = None
    auxiliary_match: Optional[bool] = None


def parse_conjecture(name: str) -> ConjectureName:
    try:
        return ConjectureName(name)
    except ValueError:
        raise UsageError(
            f"unknown conjecture '{name}'; expected one of {', '.join(c.value for c in ConjectureName)}"
        ) from None


def _euler_dv(n: int) -> Tuple[object, Fraction, Optional[Tuple[str, Fraction]]]:
    report = verify_identity(dv(n, "a", "a"), parse_assignment({"a": "E"}))
    return report, -2 * get_family(FamilyName.E).norm(n + 1), None


def _hermite_discr(n: int):
    assignment = parse_assignment({"a": "H"})
    report = verify_identity(discr(n, "a"), assignment)
    literal = verify_identity(discr_literal(n, "a"), assignment)
    rhs = Fraction(prod(k ** k for k in range(1, n + 1)))
    return report, rhs, ("literal Sylvester determinant", literal.norm_value)


def _be_dv(n: int):
    bernoulli = get_family(FamilyName.B)
    report = verify_identity(dv(n, "a", "b"), parse_assignment({"a": "B", "b": "E"}))
    rhs = -2 * (2 ** (2 * n - 1) - 1) * bernoulli.norm(2 * n)
    auxiliary = -2 * (2 ** (n - 1) - 1) * bernoulli.norm(n)
    return report, rhs, ("-2(2^(n-1)-1)B_n", auxiliary)


_EVALUATORS: Dict[ConjectureName, Callable] = {
    ConjectureName.EULER_DV: _euler_dv,
    ConjectureName.HERMITE_DISCR: _hermite_discr,
    ConjectureName.BE_DV: _be_dv,
}


@trace_function(name="appell.conjecture_check")
def conjecture_check(name, n_from: Optional[int], n_to: int) -> List[ConjectureRow]:
    """One row per n with both exact sides; the left side always comes from phi."""
    conjecture = name if isinstance(name, ConjectureName) else parse_conjecture(name)
    minimum = CONJECTURE_MIN_ORDER[conjecture]
    start = minimum if n_from is None else n_from
    if start < minimum:
        raise RangeError(f"{conjecture.value} is defined for n >= {minimum}, got {start}")
    rows = []
    for n in range(start, n_to + 1):
        report, rhs, auxiliary = _EVALUATORS[conjecture](n)
        lhs = report.norm_value
        row = ConjectureRow(
            name=conjecture.value,
            n=n,
            lhs=report.norm if report.constant else report.image,
            rhs=format_rational(rhs),
            match=report.constant and lhs == rhs,
            lhs_constant=report.constant,
        )
        if auxiliary is not None:
            label, value = auxiliary
            row.auxiliary_label = label
            row.auxiliary_rhs = format_rational(value) if value is not None else None
            row.auxiliary_match = value is not None and (lhs == value if conjecture is ConjectureName.BE_DV else value == rhs)
        if not row.match:
            logger.info(f"{conjecture.value} n={n}: lhs {row.lhs} != rhs {row.rhs}")
        rows.append(row)
    return rows
