"""
Variables of the polynomial ring.

Four kinds exist: coefficient variables s_i of a series s in {a, b, c, d}, the Appell
variable x, and the covariant variables X and Y. The ring order puts every series
variable first (by series letter, then index), then x, then X < Y.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple

__all__ = [
    "VarKind",
    "Variable",
    "SERIES",
    "series_var",
    "APPELL_X",
    "COV_X",
    "COV_Y",
    "variable_from_name",
]

SERIES: Tuple[str, ...] = ("a", "b", "c", "d")

_SERIES_NAME = re.compile(r"^([abcd])(?:(\d)|\{(\d+)\})$")


class VarKind(IntEnum):
    SERIES = 0
    APPELL_X = 1
    COVARIANT_X = 2
    COVARIANT_Y = 3


@dataclass(frozen=True, order=True)
class Variable:
    kind: VarKind
    series: str = ""
    index: int = 0

    @property
    def is_series(self) -> bool:
        return self.kind is VarKind.SERIES

    @property
    def is_covariant(self) -> bool:
        return self.kind in (VarKind.COVARIANT_X, VarKind.COVARIANT_Y)

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        series_rank = SERIES.index(self.series) if self.series else 0
        return (int(self.kind), series_rank, self.index)

    @property
    def name(self) -> str:
        if self.kind is VarKind.SERIES:
            if self.index < 10:
                return f"{self.series}{self.index}"
            return f"{self.series}{{{self.index}}}"
        return {VarKind.APPELL_X: "x", VarKind.COVARIANT_X: "X", VarKind.COVARIANT_Y: "Y"}[self.kind]

    @property
    def latex(self) -> str:
        if self.kind is VarKind.SERIES:
            return f"{self.series}_{{{self.index}}}"
        return self.name

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Variable({self.name})"


def series_var(series: str, index: int) -> Variable:
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}; expected one of {', '.join(SERIES)}")
    if index < 0:
        raise ValueError(f"coefficient index must be >= 0, got {index}")
    return Variable(VarKind.SERIES, series, index)


APPELL_X = Variable(VarKind.APPELL_X)
COV_X = Variable(VarKind.COVARIANT_X)
COV_Y = Variable(VarKind.COVARIANT_Y)


def variable_from_name(name: str) -> Variable:
    """Resolve a printed name (a0, b{12}, x, X, Y). Raises KeyError when unknown."""
    if name == "x":
        return APPELL_X
    if name == "X":
        return COV_X
    if name == "Y":
        return COV_Y
    match = _SERIES_NAME.match(name)
    if not match:
        raise KeyError(name)
    index = match.group(2) if match.group(2) is not None else match.group(3)
    return Variable(VarKind.SERIES, match.group(1), int(index))
