"""
The substitution homomorphism phi: s_i -> A_i(x), one Appell family per series.
"""
from __future__ import annotations

from typing import Dict, Iterable, Mapping, Union

from error_handling import MissingBindingError, UsageError
from exact_poly import SERIES, Polynomial

from .families import FamilyName, get_family, parse_family

__all__ = ["FamilyAssignment", "parse_assignment", "format_assignment", "phi"]

FamilyAssignment = Dict[str, FamilyName]


def parse_assignment(items: Union[Iterable[str], Mapping[str, str]]) -> FamilyAssignment:
    """Accept ["a=B", "b=E"] or {"a": "B"} and validate series and family names."""
    pairs = items.items() if isinstance(items, Mapping) else (_split(item) for item in items)
    assignment: FamilyAssignment = {}
    for series, family in pairs:
        series = series.strip()
        if series not in SERIES:
            raise UsageError(f"unknown series '{series}' in assignment; expected one of {', '.join(SERIES)}")
        assignment[series] = family if isinstance(family, FamilyName) else parse_family(family)
    return dict(sorted(assignment.items()))


def _split(item: str):
    if "=" not in item:
        raise UsageError(f"assignment '{item}' must look like series=family, e.g. a=B")
    series, family = item.split("=", 1)
    return series, family


def format_assignment(assignment: FamilyAssignment) -> str:
    return "{" + ", ".join(f"{s}={f.value}" for s, f in sorted(assignment.items())) + "}"


def phi(p: Polynomial, assignment: FamilyAssignment) -> Polynomial:
    """Replace every s_i by A_i(x) of the family assigned to s; x is left alone."""
    bindings = {}
    missing = []
    for variable in p.variables():
        if variable.is_series:
            family = assignment.get(variable.series)
            if family is None:
                missing.append(variable.name)
            else:
                bindings[variable] = get_family(family).poly(variable.index)
        elif variable.is_covariant:
            missing.append(variable.name)
    if missing:
        raise MissingBindingError(missing)
    return p.substitute(bindings, strict=False)
