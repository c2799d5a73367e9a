"""
FormContext: the order n of the generic binary form and the series in play.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from error_handling import ContextError
from exact_poly import SERIES, Polynomial, Variable, parse_polynomial, series_var

__all__ = ["FormContext"]


@dataclass(frozen=True)
class FormContext:
    """Every active series is a generic binary form of the same order."""

    order: int
    active_series: Tuple[str, ...] = ("a",)

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 1:
            raise ContextError(f"form order must be a positive integer, got {self.order!r}")
        series = tuple(sorted(set(self.active_series)))
        unknown = [s for s in series if s not in SERIES]
        if unknown or not series:
            raise ContextError(
                f"active series must be a non-empty subset of {{{', '.join(SERIES)}}}, got {self.active_series!r}"
            )
        object.__setattr__(self, "active_series", series)

    @classmethod
    def of(cls, order: int, *series: str) -> "FormContext":
        return cls(order, tuple(series) or ("a",))

    @classmethod
    def for_polynomial(cls, order: int, poly: Polynomial) -> "FormContext":
        """Smallest context covering the series that occur in poly (series a when none do)."""
        series = sorted({v.series for v in poly.variables() if v.is_series})
        return cls(order, tuple(series) or ("a",))

    def coefficient(self, series: str, index: int) -> Polynomial:
        self._check_series(series)
        if not 0 <= index <= self.order:
            raise ContextError(f"coefficient {series}{index} is outside 0..{self.order}")
        return Polynomial.var(series_var(series, index))

    def coefficients(self, series: str) -> List[Variable]:
        self._check_series(series)
        return [series_var(series, i) for i in range(self.order + 1)]

    def variables(self) -> List[Variable]:
        return [v for s in self.active_series for v in self.coefficients(s)]

    def check(self, poly: Polynomial, allow_covariant: bool = False, allow_x: bool = False) -> None:
        """Raise ContextError when poly uses a variable illegal under this context."""
        for variable in poly.variables():
            if variable.is_series:
                if variable.series not in self.active_series:
                    raise ContextError(
                        f"{variable.name} belongs to series '{variable.series}', inactive in this context",
                        details={"active_series": list(self.active_series)}
                    )
                if variable.index > self.order:
                    raise ContextError(f"{variable.name} is outside 0..{self.order}")
            elif variable.is_covariant and not allow_covariant:
                raise ContextError(f"{variable.name} is not allowed here (coefficient polynomial expected)")
            elif not variable.is_covariant and not variable.is_series and not allow_x:
                raise ContextError(f"{variable.name} is not allowed here (coefficient polynomial expected)")

    def parse(self, text: str, allow_covariant: bool = True) -> Polynomial:
        poly = parse_polynomial(text, max_index=self.order)
        self.check(poly, allow_covariant=allow_covariant)
        return poly

    def _check_series(self, series: str) -> None:
        if series not in self.active_series:
            raise ContextError(
                f"series '{series}' is not active (active: {', '.join(self.active_series)})"
            )

    def with_series(self, series: Iterable[str]) -> "FormContext":
        return FormContext(self.order, tuple(set(self.active_series) | set(series)))
