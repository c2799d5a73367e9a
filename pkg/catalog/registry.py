"""
Registry of constructions keyed by their stable command-line identifiers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from error_handling import UsageError
from exact_poly import Polynomial
from forms import Classification, FormContext, SemiInvariant, seed

from .comparison import ComparisonVerdict
from .constructions import (
    MIN_ORDER,
    CrossChecked,
    ch_joint4,
    ch_single,
    delta3x3,
    discr,
    dv,
    require_order,
    semi_hessian,
    semi_jacobian,
    sres,
    tr_bar_joint2,
    tr_joint2,
    tr_joint3,
    tr_single,
    w_poly,
)

__all__ = ["ConstructionName", "Construction", "CatalogEntry", "CONSTRUCTIONS", "build", "construction_ids"]


class ConstructionName(str, Enum):
    DV1 = "Dv1"
    W = "W"
    TR1 = "Tr1"
    CH1 = "Ch1"
    DISCR = "Discr"
    DV2 = "Dv2"
    TR2 = "Tr2"
    TR_BAR2 = "TrBar2"
    SRES = "SRes"
    TR3 = "Tr3"
    DELTA3X3 = "Delta3x3"
    CH4 = "Ch4"
    SEMI_HESSIAN = "SemiHessian"
    SEMI_JACOBIAN = "SemiJacobian"


@dataclass(frozen=True)
class CatalogEntry:
    """Uniform result of a registry build."""

    key: str
    n: int
    series: Tuple[str, ...]
    poly: Polynomial
    value: Optional[SemiInvariant] = None
    classification: Optional[Classification] = None
    verdicts: Dict[str, ComparisonVerdict] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    @property
    def is_semi_invariant(self) -> bool:
        if self.value is not None:
            return True
        return bool(self.classification and self.classification.semi_invariant)


Builder = Callable[[int, Tuple[str, ...]], CatalogEntry]


@dataclass(frozen=True)
class Construction:
    key: str
    name: ConstructionName
    arity: int
    default_series: Tuple[str, ...]
    description: str
    builder: Builder
    fixed_series: bool = False

    @property
    def min_order(self) -> int:
        return MIN_ORDER[self.key]


def _entry(key: str, n: int, series: Tuple[str, ...], value: SemiInvariant, notes: Sequence[str] = ()) -> CatalogEntry:
    return CatalogEntry(key, n, series, value.poly, value=value, notes=tuple(notes))


def _checked(key: str, n: int, series: Tuple[str, ...], checked: CrossChecked) -> CatalogEntry:
    return CatalogEntry(
        key, n, series, checked.poly, value=checked.value, verdicts=dict(checked.verdicts), notes=checked.notes
    )


def _build_w(n: int, series: Tuple[str, ...]) -> CatalogEntry:
    result = w_poly(n)
    notes = () if result.classification.semi_invariant else ("printed W is not a semi-invariant",)
    return CatalogEntry("w", n, series, result.poly, classification=result.classification, notes=notes)


def _build_discr(n: int, series: Tuple[str, ...]) -> CatalogEntry:
    value = discr(n, series[0])
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return _entry("discr", n, series, value, (f"Sylvester determinant multiplied by {sign}",))


def _build_jac(n: int, series: Tuple[str, ...]) -> CatalogEntry:
    ctx = FormContext(n, series)
    return _entry("jac", n, series, semi_jacobian(seed(ctx, series[0]), seed(ctx, series[1])))


def _build_delta3(n: int, series: Tuple[str, ...]) -> CatalogEntry:
    value = delta3x3(n, *series)
    notes = ("repeated series: degenerate",) if len(set(series)) < 3 else ()
    return _entry("delta3", n, series, value, notes)


CONSTRUCTIONS: Dict[str, Construction] = {
    c.key: c for c in [
        Construction("dv", ConstructionName.DV1, 1, ("a",), "[a0, a0]^n",
                     lambda n, s: _entry("dv", n, s, dv(n, s[0], s[0]))),
        Construction("w", ConstructionName.W, 1, ("a",), "W_n as printed (checked)", _build_w),
        Construction("tr", ConstructionName.TR1, 1, ("a",), "[a0, 1/2[a0, a0]^2]^n",
                     lambda n, s: _checked("tr", n, s, tr_single(n))),
        Construction("ch", ConstructionName.CH1, 1, ("a",), "[h, h]^n, h the semi-hessian",
                     lambda n, s: _checked("ch", n, s, ch_single(n))),
        Construction("discr", ConstructionName.DISCR, 1, ("a",), "Sylvester discriminant", _build_discr),
        Construction("sres", ConstructionName.SRES, 2, ("a", "b"), "Sylvester resultant",
                     lambda n, s: _entry("sres", n, s, sres(n, s[0], s[1]))),
        Construction("dv2", ConstructionName.DV2, 2, ("a", "b"), "[a0, b0]^n",
                     lambda n, s: _entry("dv2", n, s, dv(n, s[0], s[1]))),
        Construction("tr2", ConstructionName.TR2, 2, ("a", "b"), "[a0, [a0, b0]^1]^n",
                     lambda n, s: _checked("tr2", n, s, tr_joint2(n)), fixed_series=True),
        Construction("trbar2", ConstructionName.TR_BAR2, 2, ("a", "b"), "[a0, [a0, b0]^2]^n",
                     lambda n, s: _checked("trbar2", n, s, tr_bar_joint2(n)), fixed_series=True),
        Construction("tr3", ConstructionName.TR3, 3, ("a", "b", "c"), "[a0, [b0, c0]]^n",
                     lambda n, s: _checked("tr3", n, s, tr_joint3(n, s))),
        Construction("delta3", ConstructionName.DELTA3X3, 3, ("b", "c", "d"), "3x3 determinant of s_0..s_2 columns",
                     _build_delta3),
        Construction("ch4", ConstructionName.CH4, 4, ("a", "b", "c", "d"), "[a0, Delta(b, c, d)]^n",
                     lambda n, s: _checked("ch4", n, s, ch_joint4(n)), fixed_series=True),
        Construction("hess", ConstructionName.SEMI_HESSIAN, 1, ("a",), "1/2[a0, a0]^2",
                     lambda n, s: _entry("hess", n, s, semi_hessian(n, s[0]))),
        Construction("jac", ConstructionName.SEMI_JACOBIAN, 2, ("a", "b"), "[a0, b0]^1", _build_jac),
    ]
}


def construction_ids() -> List[str]:
    return list(CONSTRUCTIONS)


def build(key: str, n: int, series: Optional[Sequence[str]] = None) -> CatalogEntry:
    """Build a construction by its identifier.

    Args:
        key: One of the registry identifiers (dv, w, tr, ...)
        n: Order of the forms
        series: Series to use; the construction's default series when omitted

    Returns:
        The catalog entry
    """
    construction = CONSTRUCTIONS.get(key)
    if construction is None:
        raise UsageError(
            f"unknown construction '{key}'; expected one of {', '.join(CONSTRUCTIONS)}",
            details={"construction": key}
        )
    chosen = tuple(series) if series else construction.default_series
    if len(chosen) != len(construction.default_series):
        raise UsageError(
            f"{key} takes {len(construction.default_series)} series, got {len(chosen)}",
            details={"construction": key, "series": list(chosen)}
        )
    if construction.fixed_series and chosen != construction.default_series:
        raise UsageError(
            f"{key} is built over the series {', '.join(construction.default_series)} only",
            details={"construction": key, "series": list(chosen)}
        )
    require_order(key, n)
    return construction.builder(n, chosen)
