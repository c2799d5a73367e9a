"""
Appell families, the substitution homomorphism and the identity machinery built on it.
"""
from .families import AppellFamily, FamilyName, family_norm, family_poly, get_family, parse_family, save_families
from .homomorphism import FamilyAssignment, format_assignment, parse_assignment, phi
from .identities import IdentityReport, RearrangementRow, norm_table, rearrangement_check, verify_identity
from .conjectures import CONJECTURE_MIN_ORDER, ConjectureName, ConjectureRow, conjecture_check, parse_conjecture
from .binomial import BinomialIdentity, BinomialRow, binomial_check, ones_vector, parse_binomial

__all__ = [
    "AppellFamily",
    "FamilyName",
    "family_norm",
    "family_poly",
    "get_family",
    "parse_family",
    "save_families",
    "FamilyAssignment",
    "format_assignment",
    "parse_assignment",
    "phi",
    "IdentityReport",
    "RearrangementRow",
    "norm_table",
    "rearrangement_check",
    "verify_identity",
    "CONJECTURE_MIN_ORDER",
    "ConjectureName",
    "ConjectureRow",
    "conjecture_check",
    "parse_conjecture",
    "BinomialIdentity",
    "BinomialRow",
    "binomial_check",
    "ones_vector",
    "parse_binomial",
]
