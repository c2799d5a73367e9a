"""
Exact rationals and the integer helpers used everywhere in the engine.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial
from typing import Union

from error_handling import DomainError

__all__ = [
    "Rational",
    "RationalLike",
    "to_rational",
    "parse_rational",
    "format_rational",
    "falling_factorial",
    "binomial",
    "multinomial",
    "factorial",
]

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_TEXT = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(value: Union[RationalLike, str]) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise DomainError(f"boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q"; decimal notation is rejected to keep inputs exact."""
    match = _RATIONAL_TEXT.match(text)
    if not match:
        raise DomainError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical text: "p" when the denominator is 1, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def falling_factorial(m: int, i: int) -> int:
    """[m]_i = m(m-1)...(m-i+1), with [m]_0 = 1. Zero once the product passes 0."""
    if i < 0:
        raise DomainError(f"falling factorial length must be >= 0, got {i}")
    result = 1
    for k in range(i):
        result *= m - k
        if result == 0:
            return 0
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(*parts: int) -> int:
    """(p1+...+pk)! / (p1!...pk!)."""
    result = 1
    total = 0
    for part in parts:
        total += part
        result *= comb(total, part)
    return result
