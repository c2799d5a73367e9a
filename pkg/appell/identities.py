"""
Identity reports: the image of a semi-invariant under phi, its constancy and its norm,
and norm tables over a range of orders.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import anyio
from anyio import to_process
from pydantic import BaseModel

from error_handling import RangeError, trace_function
from exact_poly import Polynomial, binomial, format_polynomial, format_rational, to_rational
from catalog import CatalogEntry, build
from forms import SemiInvariant

from .families import FamilyName, get_family
from .homomorphism import FamilyAssignment, parse_assignment, phi

__all__ = [
    "IdentityReport",
    "verify_identity",
    "norm_table",
    "RearrangementRow",
    "rearrangement_check",
]

logger = logging.getLogger("binform.appell")

Verifiable = Union[SemiInvariant, CatalogEntry, Polynomial]


class IdentityReport(BaseModel):
    construction: str
    n: Optional[int] = None
    assignment: Dict[str, str]
    status: str = "ok"
    constant: bool = False
    norm: Optional[str] = None
    image: Optional[str] = None
    expected: Optional[str] = None
    provenance: Optional[str] = None
    matches_expected: Optional[bool] = None
    error: Optional[str] = None

    @property
    def norm_value(self) -> Optional[Fraction]:
        return to_rational(self.norm) if self.norm is not None else None

    @property
    def passed(self) -> bool:
        if self.status != "ok" or not self.constant:
            return False
        return self.matches_expected is not False


def verify_identity(
    s: Verifiable,
    assignment: FamilyAssignment,
    construction: str = "",
    n: Optional[int] = None,
    expected: Optional[Union[Fraction, int, str]] = None,
    provenance: Optional[str] = None
) -> IdentityReport:
    """Substitute the assignment and decide constancy exactly.

    Non-semi-invariant inputs (the printed W) are accepted; their report carries the
    full image and status "not-semi-invariant".
    """
    status = "ok"
    if isinstance(s, CatalogEntry):
        construction = construction or s.key
        n = s.n if n is None else n
        if not s.is_semi_invariant:
            status = "not-semi-invariant"
        poly = s.poly
    elif isinstance(s, SemiInvariant):
        poly = s.poly
        n = s.context.order if n is None else n
    else:
        poly = s

    image = phi(poly, assignment)
    constant = image.diff_x().is_zero()
    norm = image.constant_term() if constant else None

    expected_value = to_rational(expected) if expected is not None else None
    matches = None
    if expected_value is not None:
        matches = constant and norm == expected_value

    report = IdentityReport(
        construction=construction,
        n=n,
        assignment={series: family.value for series, family in assignment.items()},
        status=status,
        constant=constant,
        norm=format_rational(norm) if norm is not None else None,
        image=format_polynomial(image),
        expected=format_rational(expected_value) if expected_value is not None else None,
        provenance=provenance or ("expected" if expected_value is not None else "computed"),
        matches_expected=matches,
    )
    logger.debug(f"verify {construction} n={n}: constant={constant} norm={report.norm}")
    return report


def _norm_row(key: str, assignment_items: Tuple[Tuple[str, str], ...], n: int) -> dict:
    """One row of a norm table; module level so worker processes can import it."""
    assignment = parse_assignment(dict(assignment_items))
    try:
        entry = build(key, n)
    except RangeError as exc:
        return IdentityReport(
            construction=key, n=n, assignment=dict(assignment_items), status="undefined", error=exc.message
        ).model_dump(mode="json")
    return verify_identity(entry, assignment, construction=key, n=n).model_dump(mode="json")


async def _parallel_rows(key: str, assignment_items, orders: Sequence[int], jobs: int) -> Dict[int, dict]:
    limiter = anyio.CapacityLimiter(jobs)
    rows: Dict[int, dict] = {}

    async def run_one(n: int) -> None:
        rows[n] = await to_process.run_sync(_norm_row, key, assignment_items, n, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for n in orders:
            tg.start_soon(run_one, n)
    return rows


@trace_function(name="appell.norm_table")
def norm_table(
    key: str,
    assignment: FamilyAssignment,
    n_from: int,
    n_to: int,
    jobs: int = 1
) -> List[IdentityReport]:
    """Identity reports for n_from..n_to; out-of-domain orders become "undefined" rows.

    Args:
        key: Construction identifier
        assignment: Series to family map
        n_from: First order
        n_to: Last order (inclusive)
        jobs: Worker processes; output is identical for every value

    Returns:
        Reports ordered by n
    """
    if n_from > n_to:
        raise RangeError(f"empty order range {n_from}..{n_to}")
    orders = list(range(n_from, n_to + 1))
    items = tuple((series, family.value) for series, family in sorted(assignment.items()))
    if jobs <= 1 or len(orders) == 1:
        rows = {n: _norm_row(key, items, n) for n in orders}
    else:
        logger.info(f"norm table {key} over {len(orders)} orders with {jobs} workers")
        rows = anyio.run(_parallel_rows, key, items, orders, jobs)
    return [IdentityReport(**rows[n]) for n in orders]


class RearrangementRow(BaseModel):
    family: str
    n: int
    parity: str
    constant: Optional[str] = None
    expected_constant: str
    printed_constant: str
    constant_matches_expected: bool
    printed_rearrangement_holds: bool


def rearrangement_check(family: Union[FamilyName, str], n_from: int, n_to: int) -> List[RearrangementRow]:
    """Dv_n(A, T) is the constant (-1)^n A_n; check the printed rearrangement
    A_n(x) = sum_(i<n) (-1)^(i+1) C(n, i) A_i(x) x^(n-i) + A_n per n."""
    source = get_family(family)
    powers = get_family(FamilyName.T)
    assignment = parse_assignment({"a": source.name.value, "b": "T"})
    rows = []
    for n in range(max(n_from, 1), n_to + 1):
        report = verify_identity(build("dv2", n), assignment, construction="dv2", n=n)
        expected = source.norm(n) * (-1) ** n
        rearranged = Polynomial.constant(source.norm(n))
        for i in range(n):
            term = source.poly(i) * powers.poly(n - i) * binomial(n, i)
            rearranged = rearranged + term if i % 2 else rearranged - term
        rows.append(RearrangementRow(
            family=source.name.value,
            n=n,
            parity="even" if n % 2 == 0 else "odd",
            constant=report.norm,
            expected_constant=format_rational(expected),
            printed_constant=format_rational(source.norm(n)),
            constant_matches_expected=report.constant and report.norm_value == expected,
            printed_rearrangement_holds=rearranged == source.poly(n),
        ))
    return rows
