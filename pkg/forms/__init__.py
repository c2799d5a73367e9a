"""
Invariant-theory operators over a FormContext.
"""
from .context import FormContext
from .derivations import derive_D, derive_Dstar, derive_E, iterate, twisted_D, twisted_Dstar
from .classification import (
    Classification,
    classify,
    homogeneous_degree,
    is_covariant,
    is_invariant,
    is_isobaric,
    is_proper,
    is_semi_invariant,
    ord,
    order_of,
    printed_weight,
    weight,
)
from .covariants import generic_form, kappa, order_xy, transvectant
from .semi_invariants import SemiInvariant, kappa_inv, seed, semi_transvectant, transvectant_scale

__all__ = [
    "FormContext",
    "derive_D",
    "derive_Dstar",
    "derive_E",
    "iterate",
    "twisted_D",
    "twisted_Dstar",
    "Classification",
    "classify",
    "homogeneous_degree",
    "is_covariant",
    "is_invariant",
    "is_isobaric",
    "is_proper",
    "is_semi_invariant",
    "ord",
    "order_of",
    "printed_weight",
    "weight",
    "generic_form",
    "kappa",
    "order_xy",
    "transvectant",
    "SemiInvariant",
    "kappa_inv",
    "seed",
    "semi_transvectant",
    "transvectant_scale",
]
