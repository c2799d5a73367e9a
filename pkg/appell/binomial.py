"""
Binomial identities obtained by sending every coefficient to 1 in a semi-invariant
or in one of its printed closed expansions.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel

from error_handling import UsageError
from exact_poly import Polynomial, format_rational
from catalog import (
    closed_ch_joint4,
    closed_ch_single,
    closed_tr_bar_joint2,
    closed_tr_joint2,
    closed_tr_single,
    dv,
)

__all__ = ["BinomialIdentity", "BinomialRow", "binomial_check", "ones_vector", "parse_binomial"]


class BinomialIdentity(str, Enum):
    DV = "dv"
    TR = "tr"
    CH = "ch"
    TR2 = "tr2"
    TRBAR2 = "trbar2"
    TRBAR2_CORRECTED = "trbar2-corrected"
    CH4 = "ch4"


def ones_vector(p: Polynomial) -> Fraction:
    """p(1, 1, ..., 1)."""
    return p.evaluate({v: 1 for v in p.variables()})


# (smallest n, the polynomial whose ones-vector value is the printed sum)
_SOURCES: Dict[BinomialIdentity, tuple] = {
    BinomialIdentity.DV: (1, lambda n: dv(n, "a", "a").poly),
    BinomialIdentity.TR: (4, closed_tr_single),
    BinomialIdentity.CH: (4, closed_ch_single),
    BinomialIdentity.TR2: (2, closed_tr_joint2),
    BinomialIdentity.TRBAR2: (4, lambda n: closed_tr_bar_joint2(n, "printed")),
    BinomialIdentity.TRBAR2_CORRECTED: (4, lambda n: closed_tr_bar_joint2(n, "corrected")),
    BinomialIdentity.CH4: (3, closed_ch_joint4),
}


class BinomialRow(BaseModel):
    which: str
    n: int
    status: str = "ok"
    value: Optional[str] = None
    zero: Optional[bool] = None


def parse_binomial(name: str) -> BinomialIdentity:
    try:
        return BinomialIdentity(name)
    except ValueError:
        raise UsageError(
            f"unknown identity '{name}'; expected one of {', '.join(b.value for b in BinomialIdentity)}"
        ) from None


def binomial_check(which, n_from: int, n_to: int) -> List[BinomialRow]:
    """Evaluate the printed sum exactly for each n; orders outside the domain are "undefined"."""
    identity = which if isinstance(which, BinomialIdentity) else parse_binomial(which)
    minimum, source = _SOURCES[identity]
    rows = []
    for n in range(n_from, n_to + 1):
        if n < minimum:
            rows.append(BinomialRow(which=identity.value, n=n, status="undefined"))
            continue
        value = ones_vector(source(n))
        rows.append(BinomialRow(which=identity.value, n=n, value=format_rational(value), zero=value == 0))
    return rows
