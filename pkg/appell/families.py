"""
Appell families B (Bernoulli), E (Euler), H (probabilists' Hermite) and T (powers of x),
generated exactly by recurrence and cached per process.
"""
from __future__ import annotations

import json
import logging
import os
import threading
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from error_handling import DomainError, UsageError
from exact_poly import APPELL_X, Polynomial, binomial, polynomial_from_json, polynomial_to_json

__all__ = ["FamilyName", "AppellFamily", "get_family", "family_poly", "family_norm", "parse_family", "save_families"]

logger = logging.getLogger("binform.appell")

X = Polynomial.var(APPELL_X)


class FamilyName(str, Enum):
    B = "B"
    E = "E"
    H = "H"
    T = "T"


def parse_family(name: str) -> FamilyName:
    try:
        return FamilyName(name.strip().upper())
    except ValueError:
        raise UsageError(
            f"unknown Appell family '{name}'; expected one of {', '.join(f.value for f in FamilyName)}"
        ) from None


class AppellFamily:
    """Growable cache of A_0(x), A_1(x), ... for one family. Growth is lock-protected."""

    def __init__(self, name: FamilyName):
        self.name = FamilyName(name)
        self._polys: List[Polynomial] = [Polynomial.one()]
        self._bernoulli_numbers: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._polys)

    def poly(self, k: int) -> Polynomial:
        if k < 0:
            raise DomainError(f"family index must be >= 0, got {k}")
        if k >= len(self._polys):
            with self._lock:
                while len(self._polys) <= k:
                    self._polys.append(self._next(len(self._polys)))
        return self._polys[k]

    def norm(self, k: int) -> Fraction:
        """A_k(0)."""
        return self.poly(k).constant_term()

    def _next(self, n: int) -> Polynomial:
        if self.name is FamilyName.T:
            return Polynomial.var(APPELL_X, n)
        if self.name is FamilyName.H:
            previous = self._polys[n - 1]
            before = self._polys[n - 2] if n >= 2 else Polynomial.zero()
            return X * previous - before * (n - 1)
        if self.name is FamilyName.E:
            total = Polynomial.var(APPELL_X, n)
            correction = Polynomial.zero()
            for k in range(n):
                correction = correction + self._polys[k] * binomial(n, k)
            return total - correction * Fraction(1, 2)
        return self._next_bernoulli(n)

    def _next_bernoulli(self, n: int) -> Polynomial:
        # sum_{k<=n} C(n+1, k) B_k = 0 fixes B_n
        while len(self._bernoulli_numbers) <= n:
            m = len(self._bernoulli_numbers)
            acc = sum(binomial(m + 1, k) * self._bernoulli_numbers[k] for k in range(m))
            self._bernoulli_numbers.append(Fraction(-acc, m + 1))
        total = Polynomial.zero()
        for k in range(n + 1):
            total = total + Polynomial.var(APPELL_X, n - k) * (binomial(n, k) * self._bernoulli_numbers[k])
        return total

    def check_appell_property(self, upto: int) -> bool:
        """A_0 = 1 and d/dx A_k = k A_(k-1) for k = 1..upto."""
        if self.poly(0) != Polynomial.one():
            return False
        return all(self.poly(k).diff_x() == self.poly(k - 1) * k for k in range(1, upto + 1))

    # Persistence

    def _cache_file(self, directory: str) -> Path:
        return Path(directory) / f"appell_{self.name.value}.json"

    def save(self, directory: str) -> Path:
        path = self._cache_file(directory)
        path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            payload = {"family": self.name.value, "polys": [polynomial_to_json(p) for p in self._polys]}
        path.write_text(json.dumps(payload, sort_keys=True))
        logger.debug(f"saved {len(payload['polys'])} {self.name.value} polynomials to {path}")
        return path

    def load(self, directory: str) -> int:
        """Load a persisted cache; a file that fails the Appell check is ignored."""
        path = self._cache_file(directory)
        if not path.exists():
            return 0
        try:
            payload = json.loads(path.read_text())
            polys = [polynomial_from_json(entry) for entry in payload["polys"]]
        except (ValueError, KeyError, TypeError) as exc:
            logger.warning(f"ignoring unreadable family cache {path}: {exc}")
            return 0
        if payload.get("family") != self.name.value or not polys or polys[0] != Polynomial.one() or any(
            polys[k].diff_x() != polys[k - 1] * k for k in range(1, len(polys))
        ):
            logger.warning(f"ignoring family cache {path}: Appell check failed")
            return 0
        with self._lock:
            if len(polys) > len(self._polys):
                self._polys = polys
                if self.name is FamilyName.B:
                    self._bernoulli_numbers = [p.constant_term() for p in polys]
        return len(polys)


_FAMILIES: Dict[FamilyName, AppellFamily] = {}
_REGISTRY_LOCK = threading.Lock()


def get_family(name, cache_dir: Optional[str] = None) -> AppellFamily:
    """Process-wide family instance, loaded from cache_dir (or BINFORM_CACHE_DIR) on first use."""
    key = name if isinstance(name, FamilyName) else parse_family(name)
    with _REGISTRY_LOCK:
        family = _FAMILIES.get(key)
        if family is None:
            family = AppellFamily(key)
            directory = cache_dir or os.getenv("BINFORM_CACHE_DIR")
            if directory:
                family.load(directory)
            _FAMILIES[key] = family
    return family


def save_families(directory: str) -> List[Path]:
    with _REGISTRY_LOCK:
        families = list(_FAMILIES.values())
    return [family.save(directory) for family in families]


def family_poly(name, k: int) -> Polynomial:
    return get_family(name).poly(k)


def family_norm(name, k: int) -> Fraction:
    return get_family(name).norm(k)
