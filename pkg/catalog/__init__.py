"""
Named semi-invariant constructions, their printed closed expansions and the registry.
"""
from .comparison import ComparisonVerdict, FirstDifference, compare
from .closed_forms import (
    TR_BAR_VARIANTS,
    closed_ch_joint4,
    closed_ch_single,
    closed_tr_bar_joint2,
    closed_tr_joint2,
    closed_tr_joint3,
    closed_tr_single,
)
from .constructions import (
    MIN_ORDER,
    CrossChecked,
    WPolynomial,
    ch_joint4,
    ch_joint4_header,
    ch_single,
    delta3x3,
    describe,
    discr,
    discr_literal,
    dv,
    require_order,
    semi_hessian,
    semi_jacobian,
    sres,
    sylvester_discriminant_matrix,
    sylvester_resultant_matrix,
    tr_bar_joint2,
    tr_joint2,
    tr_joint3,
    tr_single,
    w_poly,
)
from .registry import CONSTRUCTIONS, CatalogEntry, Construction, ConstructionName, build, construction_ids

__all__ = [
    "ComparisonVerdict",
    "FirstDifference",
    "compare",
    "TR_BAR_VARIANTS",
    "closed_ch_joint4",
    "closed_ch_single",
    "closed_tr_bar_joint2",
    "closed_tr_joint2",
    "closed_tr_joint3",
    "closed_tr_single",
    "MIN_ORDER",
    "CrossChecked",
    "WPolynomial",
    "ch_joint4",
    "ch_joint4_header",
    "ch_single",
    "delta3x3",
    "describe",
    "discr",
    "discr_literal",
    "dv",
    "require_order",
    "semi_hessian",
    "semi_jacobian",
    "sres",
    "sylvester_discriminant_matrix",
    "sylvester_resultant_matrix",
    "tr_bar_joint2",
    "tr_joint2",
    "tr_joint3",
    "tr_single",
    "w_poly",
    "CONSTRUCTIONS",
    "CatalogEntry",
    "Construction",
    "ConstructionName",
    "build",
    "construction_ids",
]
