"""
Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from monomials to nonzero Fractions. A monomial is a tuple of
(variable, exponent) pairs sorted by variable with every exponent positive, so two
polynomials are equal exactly when their term maps are equal.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from error_handling import DomainError, InexactDivisionError, MissingBindingError

from .rational import RationalLike, to_rational
from .variables import APPELL_X, Variable

__all__ = [
    "Monomial",
    "Polynomial",
    "Scalar",
    "monomial_key",
    "monomial_degree",
    "monomial_mul",
    "proportionality",
]

Monomial = Tuple[Tuple[Variable, int], ...]
Scalar = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


@lru_cache(maxsize=200_000)
def monomial_key(monomial: Monomial) -> tuple:
    """Sort key for the lexicographic order: a larger key means an earlier term.

    Lower-ranked variables are more significant; a monomial that carries a variable
    the other lacks is the larger one.
    """
    return tuple(
        (tuple(-part for part in variable.sort_key), exponent)
        for variable, exponent in monomial
    )


def monomial_degree(monomial: Monomial, only: Optional[Callable[[Variable], bool]] = None) -> int:
    return sum(e for v, e in monomial if only is None or only(v))


def monomial_mul(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    powers: Dict[Variable, int] = dict(left)
    for variable, exponent in right:
        powers[variable] = powers.get(variable, 0) + exponent
    return tuple(sorted(powers.items()))


def _monomial_div(numerator: Monomial, denominator: Monomial) -> Optional[Monomial]:
    powers = dict(numerator)
    for variable, exponent in denominator:
        remaining = powers.get(variable, 0) - exponent
        if remaining < 0:
            return None
        if remaining == 0:
            del powers[variable]
        else:
            powers[variable] = remaining
    return tuple(sorted(powers.items()))


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, RationalLike]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            value = to_rational(coefficient)
            if value != 0:
                key = _canonical(monomial)
                cleaned[key] = cleaned.get(key, 0) + value
        self._terms = {m: c for m, c in cleaned.items() if c != 0}
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._trusted({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        value = to_rational(value)
        return cls._trusted({ONE_MONOMIAL: value} if value != 0 else {})

    @classmethod
    def var(cls, variable: Variable, exponent: int = 1) -> "Polynomial":
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent} for {variable.name}")
        if exponent == 0:
            return cls.one()
        return cls._trusted({((variable, exponent),): Fraction(1)})

    @classmethod
    def term(cls, coefficient: RationalLike, powers: Mapping[Variable, int]) -> "Polynomial":
        return cls({tuple(sorted((v, e) for v, e in powers.items() if e)): coefficient})

    # Inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms from the lexicographically largest monomial down."""
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        monomial = max(self._terms, key=monomial_key)
        return monomial, self._terms[monomial]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def coefficient(self, powers: Union[Monomial, Mapping[Variable, int]]) -> Fraction:
        if isinstance(powers, Mapping):
            powers = tuple(sorted((v, e) for v, e in powers.items() if e))
        return self._terms.get(powers, Fraction(0))

    def variables(self) -> List[Variable]:
        seen = {v for monomial in self._terms for v, _ in monomial}
        return sorted(seen)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(monomial_degree(m) for m in self._terms)

    def degree_in(self, variable: Variable) -> int:
        return max((e for m in self._terms for v, e in m if v == variable), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    # Ring operations

    @staticmethod
    def _coerce(other: Union["Polynomial", Scalar]) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = result.get(monomial, 0) + coefficient
            if value:
                result[monomial] = value
            else:
                result.pop(monomial, None)
        return Polynomial._trusted(result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, factor: RationalLike) -> "Polynomial":
        factor = to_rational(factor)
        if factor == 0:
            return Polynomial.zero()
        return Polynomial._trusted({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = monomial_mul(m1, m2)
                result[monomial] = result.get(monomial, 0) + c1 * c2
        return Polynomial._trusted({m: c for m, c in result.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"polynomial powers need a non-negative integer exponent, got {exponent!r}")
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # a constant hashes like the scalar it equals
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(ONE_MONOMIAL, Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Calculus and substitution

    def partial(self, variable: Variable) -> "Polynomial":
        """Formal partial derivative."""
        result: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in self._terms.items():
            powers = dict(monomial)
            exponent = powers.get(variable, 0)
            if not exponent:
                continue
            if exponent == 1:
                del powers[variable]
            else:
                powers[variable] = exponent - 1
            reduced = tuple(sorted(powers.items()))
            result[reduced] = result.get(reduced, 0) + coefficient * exponent
        return Polynomial._trusted({m: c for m, c in result.items() if c != 0})

    def diff_x(self) -> "Polynomial":
        return self.partial(APPELL_X)

    def substitute(
        self,
        bindings: Mapping[Variable, Union["Polynomial", Scalar]],
        strict: bool = True
    ) -> "Polynomial":
        """Replace variables by polynomials or rationals.

        With strict=True every variable of the polynomial must be bound; otherwise
        unbound variables are kept as they are.
        """
        if strict:
            missing = [v.name for v in self.variables() if v not in bindings]
            if missing:
                raise MissingBindingError(missing)

        images: Dict[Variable, Polynomial] = {}
        for variable, image in bindings.items():
            coerced = self._coerce(image)
            if coerced is None:
                raise DomainError(f"binding for {variable.name} is not exact: {image!r}")
            images[variable] = coerced

        power_cache: Dict[Tuple[Variable, int], Polynomial] = {}

        def power(variable: Variable, exponent: int) -> Polynomial:
            key = (variable, exponent)
            if key not in power_cache:
                image = images.get(variable)
                power_cache[key] = Polynomial.var(variable, exponent) if image is None else image ** exponent
            return power_cache[key]

        result = Polynomial.zero()
        for monomial, coefficient in self._terms.items():
            product = Polynomial.constant(coefficient)
            for variable, exponent in monomial:
                product = product * power(variable, exponent)
                if product.is_zero():
                    break
            result = result + product
        return result

    def evaluate(self, values: Mapping[Variable, RationalLike]) -> Fraction:
        """Substitute a rational for every variable."""
        missing = [v.name for v in self.variables() if v not in values]
        if missing:
            raise MissingBindingError(missing)
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            value = coefficient
            for variable, exponent in monomial:
                value *= to_rational(values[variable]) ** exponent
            total += value
        return total

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; InexactDivisionError when a remainder is left."""
        if divisor.is_zero():
            raise InexactDivisionError("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_term())

        lead_monomial, lead_coefficient = divisor.leading_term()
        remainder = dict(self._terms)
        quotient: Dict[Monomial, Fraction] = {}
        while remainder:
            monomial = max(remainder, key=monomial_key)
            factor = _monomial_div(monomial, lead_monomial)
            if factor is None:
                raise InexactDivisionError(
                    "exact division left a remainder",
                    details={"term": _monomial_name(monomial), "divisor_lead": _monomial_name(lead_monomial)}
                )
            coefficient = remainder[monomial] / lead_coefficient
            quotient[factor] = coefficient
            for d_monomial, d_coefficient in divisor._terms.items():
                target = monomial_mul(factor, d_monomial)
                value = remainder.get(target, 0) - coefficient * d_coefficient
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return Polynomial._trusted(quotient)

    def map_coefficients(self, func) -> "Polynomial":
        return Polynomial({m: func(c) for m, c in self._terms.items()})

    def filter_terms(self, predicate) -> "Polynomial":
        return Polynomial._trusted({m: c for m, c in self._terms.items() if predicate(m)})

    def __repr__(self) -> str:
        from .expressions import format_polynomial
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        from .expressions import format_polynomial
        return format_polynomial(self)


def _canonical(monomial: Iterable[Tuple[Variable, int]]) -> Monomial:
    powers: Dict[Variable, int] = {}
    for variable, exponent in monomial:
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent} for {variable.name}")
        if exponent:
            powers[variable] = powers.get(variable, 0) + exponent
    return tuple(sorted(powers.items()))


def _monomial_name(monomial: Monomial) -> str:
    return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in monomial) or "1"


def proportionality(left: Polynomial, right: Polynomial) -> Optional[Fraction]:
    """The rational c with left = c * right, or None when there is none.

    Two zero polynomials have no well-defined ratio and give None.
    """
    if right.is_zero():
        return None
    if left.is_zero():
        return Fraction(0)
    if set(left.terms) != set(right.terms):
        return None
    monomial, coefficient = next(iter(right.terms.items()))
    ratio = left.terms[monomial] / coefficient
    for monomial, coefficient in right.terms.items():
        if left.terms[monomial] != ratio * coefficient:
            return None
    return ratio
