"""
Exact rational polynomial arithmetic: rationals, variables, sparse polynomials,
determinants and the expression formats.
"""
from .rational import (
    Rational,
    RationalLike,
    binomial,
    factorial,
    falling_factorial,
    format_rational,
    multinomial,
    parse_rational,
    to_rational,
)
from .variables import APPELL_X, COV_X, COV_Y, SERIES, Variable, VarKind, series_var, variable_from_name
from .polynomial import Monomial, Polynomial, monomial_degree, monomial_key, proportionality
from .matrix import bareiss_det, cofactor_det, det
from .expressions import (
    FORMATS,
    format_polynomial,
    parse_polynomial,
    polynomial_from_json,
    polynomial_to_json,
)

__all__ = [
    "Rational",
    "RationalLike",
    "binomial",
    "factorial",
    "falling_factorial",
    "format_rational",
    "multinomial",
    "parse_rational",
    "to_rational",
    "APPELL_X",
    "COV_X",
    "COV_Y",
    "SERIES",
    "Variable",
    "VarKind",
    "series_var",
    "variable_from_name",
    "Monomial",
    "Polynomial",
    "monomial_degree",
    "monomial_key",
    "proportionality",
    "bareiss_det",
    "cofactor_det",
    "det",
    "FORMATS",
    "format_polynomial",
    "parse_polynomial",
    "polynomial_from_json",
    "polynomial_to_json",
]
