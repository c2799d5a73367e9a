"""
Named semi-invariant constructions.

Every construction that is defined through semi-transvectants uses the falling-factorial
formula as the normative route; the printed closed expansions are recomputed and
compared, never substituted for it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from error_handling import ContextError, RangeError, trace_function
from exact_poly import Polynomial, binomial, det, format_polynomial
from forms import (
    Classification,
    FormContext,
    SemiInvariant,
    classify,
    derive_Dstar,
    seed,
    semi_transvectant,
)

from .closed_forms import (
    TR_BAR_VARIANTS,
    closed_ch_joint4,
    closed_ch_single,
    closed_tr_bar_joint2,
    closed_tr_joint2,
    closed_tr_joint3,
    closed_tr_single,
)
from .comparison import ComparisonVerdict, compare

__all__ = [
    "MIN_ORDER",
    "CrossChecked",
    "WPolynomial",
    "require_order",
    "dv",
    "w_poly",
    "semi_hessian",
    "semi_jacobian",
    "tr_single",
    "ch_single",
    "sylvester_discriminant_matrix",
    "discr_literal",
    "discr",
    "sylvester_resultant_matrix",
    "sres",
    "tr_joint2",
    "tr_bar_joint2",
    "tr_joint3",
    "delta3x3",
    "ch_joint4",
    "ch_joint4_header",
    "describe",
]

logger = logging.getLogger("binform.catalog")

MIN_ORDER: Dict[str, int] = {
    "dv": 1,
    "w": 2,
    "tr": 4,
    "ch": 4,
    "discr": 2,
    "sres": 1,
    "dv2": 1,
    "tr2": 2,
    "trbar2": 4,
    "tr3": 2,
    "delta3": 2,
    "ch4": 3,
    "hess": 2,
    "jac": 1,
}


def require_order(key: str, n: int) -> None:
    minimum = MIN_ORDER[key]
    if n < minimum:
        raise RangeError(
            f"{key} requires n >= {minimum} (min_order rule), got n={n}",
            details={"construction": key, "n": n, "min_order": minimum}
        )


@dataclass(frozen=True)
class CrossChecked:
    """A normative value together with printed closed expansions and their verdicts."""

    value: SemiInvariant
    closed_forms: Dict[str, Polynomial] = field(default_factory=dict)
    verdicts: Dict[str, ComparisonVerdict] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    @property
    def poly(self) -> Polynomial:
        return self.value.poly


@dataclass(frozen=True)
class WPolynomial:
    poly: Polynomial
    classification: Classification


def _cross_check(value: SemiInvariant, closed: Dict[str, Polynomial], notes: Sequence[str] = ()) -> CrossChecked:
    verdicts = {name: compare(value.poly, candidate) for name, candidate in closed.items()}
    for name, verdict in verdicts.items():
        logger.debug(f"closed formula '{name}' vs semi-transvectant: {verdict.summary()}")
    return CrossChecked(value, dict(closed), verdicts, tuple(notes))


def dv(n: int, s1: str = "a", s2: str = "a") -> SemiInvariant:
    """sum_i (-1)^i C(n, i) s1_i s2_(n-i), i.e. [s1_0, s2_0]^n."""
    require_order("dv", n)
    ctx = FormContext(n, (s1, s2))
    total = Polynomial.zero()
    for i in range(n + 1):
        term = ctx.coefficient(s1, i) * ctx.coefficient(s2, n - i) * binomial(n, i)
        total = total - term if i % 2 else total + term
    return SemiInvariant.certify(total, ctx, degree=2, weight_hint=0)


def w_poly(n: int) -> WPolynomial:
    """sum_(i=1..n) (-1)^i C(n, i) a_(n-i) a_1^i exactly as printed, with its classification."""
    require_order("w", n)
    ctx = FormContext(n, ("a",))
    a1 = ctx.coefficient("a", 1)
    total = Polynomial.zero()
    for i in range(1, n + 1):
        term = ctx.coefficient("a", n - i) * a1 ** i * binomial(n, i)
        total = total - term if i % 2 else total + term
    verdict = classify(total, ctx)
    if not verdict.semi_invariant:
        logger.info(f"w_poly({n}) as printed is not a semi-invariant: D(W) = {verdict.d_image}")
    return WPolynomial(total, verdict)


def semi_hessian(n: int, series: str = "a") -> SemiInvariant:
    """1/2 [s0, s0]^2 = s0 s2 - s1^2."""
    require_order("hess", n)
    ctx = FormContext(n, (series,))
    s0 = seed(ctx, series)
    return semi_transvectant(s0, s0, 2).scale(Fraction(1, 2))


def semi_jacobian(p: SemiInvariant, q: SemiInvariant) -> SemiInvariant:
    """p D*(q) / ord(q) - q D*(p) / ord(p)."""
    if p.context.order != q.context.order:
        raise ContextError("semi_jacobian needs forms of the same order")
    if p.order < 1 or q.order < 1:
        raise RangeError(
            f"semi_jacobian needs ord >= 1 on both arguments, got {p.order} and {q.order}",
            details={"ord_p": p.order, "ord_q": q.order}
        )
    ctx = p.context.with_series(q.context.active_series)
    value = (
        p.poly * derive_Dstar(q.poly, q.context) * Fraction(1, q.order)
        - q.poly * derive_Dstar(p.poly, p.context) * Fraction(1, p.order)
    )
    return SemiInvariant.certify(value, ctx, degree=p.degree + q.degree, weight_hint=p.weight + q.weight - 2)


@trace_function(name="catalog.tr_single")
def tr_single(n: int) -> CrossChecked:
    """Tr_n(a0) = [a0, 1/2 [a0, a0]^2]^n, cross-checked against its printed double sum."""
    require_order("tr", n)
    ctx = FormContext(n, ("a",))
    value = semi_transvectant(seed(ctx, "a"), semi_hessian(n, "a"), n)
    return _cross_check(value, {"printed": closed_tr_single(n)})


@trace_function(name="catalog.ch_single")
def ch_single(n: int) -> CrossChecked:
    """Ch_n(a0) = [h, h]^n with h the semi-hessian; zero for odd n."""
    require_order("ch", n)
    h = semi_hessian(n, "a")
    value = semi_transvectant(h, h, n)
    notes = ("odd n: vanishes by antisymmetry",) if n % 2 else ()
    return _cross_check(value, {"printed": closed_ch_single(n)}, notes)


def sylvester_discriminant_matrix(n: int, series: str = "a") -> List[List[Polynomial]]:
    """(2n-1)x(2n-1): n-1 shifted rows of C(n, i) s_i, then n shifted rows of (n-i) C(n, i) s_i."""
    require_order("discr", n)
    ctx = FormContext(n, (series,))
    size = 2 * n - 1
    rows = [[Polynomial.zero()] * size for _ in range(size)]
    for r in range(n - 1):
        for i in range(n + 1):
            rows[r][r + i] = ctx.coefficient(series, i) * binomial(n, i)
    for r in range(n):
        for i in range(n):
            rows[n - 1 + r][r + i] = ctx.coefficient(series, i) * ((n - i) * binomial(n, i))
    return rows


def discr_literal(n: int, series: str = "a") -> SemiInvariant:
    """The determinant of the Sylvester matrix as it stands."""
    ctx = FormContext(n, (series,))
    value = det(sylvester_discriminant_matrix(n, series))
    return SemiInvariant.certify(value, ctx, degree=2 * n - 1, weight_hint=n)


@trace_function(name="catalog.discr")
def discr(n: int, series: str = "a") -> SemiInvariant:
    """Sylvester determinant times (-1)^(n(n-1)/2): s0 times the classical discriminant."""
    literal = discr_literal(n, series)
    if (n * (n - 1) // 2) % 2:
        return literal.scale(-1)
    return literal


def sylvester_resultant_matrix(n: int, s1: str = "a", s2: str = "b") -> List[List[Polynomial]]:
    """2n x 2n: n shifted rows of C(n, i) s1_i, then n shifted rows of C(n, i) s2_i."""
    require_order("sres", n)
    ctx = FormContext(n, (s1, s2))
    size = 2 * n
    rows = [[Polynomial.zero()] * size for _ in range(size)]
    for block, series in enumerate((s1, s2)):
        for r in range(n):
            for i in range(n + 1):
                rows[block * n + r][r + i] = ctx.coefficient(series, i) * binomial(n, i)
    return rows


@trace_function(name="catalog.sres")
def sres(n: int, s1: str = "a", s2: str = "b") -> SemiInvariant:
    ctx = FormContext(n, (s1, s2))
    value = det(sylvester_resultant_matrix(n, s1, s2))
    if s1 == s2:
        logger.info(f"sres({n}, {s1}, {s2}) has repeated row blocks and vanishes")
    return SemiInvariant.certify(value, ctx, degree=2 * n, weight_hint=0)


@trace_function(name="catalog.tr_joint2")
def tr_joint2(n: int) -> CrossChecked:
    """Tr_n(a0, b0) = [a0, [a0, b0]^1]^n."""
    require_order("tr2", n)
    ctx = FormContext(n, ("a", "b"))
    a0, b0 = seed(ctx, "a"), seed(ctx, "b")
    value = semi_transvectant(a0, semi_transvectant(a0, b0, 1), n)
    notes = ()
    if value.is_zero():
        notes = (f"Tr_{n}(a0, b0) vanishes identically",)
    return _cross_check(value, {"printed": closed_tr_joint2(n)}, notes)


@trace_function(name="catalog.tr_bar_joint2")
def tr_bar_joint2(n: int) -> CrossChecked:
    """T-bar_n(a0, b0) = [a0, [a0, b0]^2]^n against the printed expansion and its variants."""
    require_order("trbar2", n)
    ctx = FormContext(n, ("a", "b"))
    a0, b0 = seed(ctx, "a"), seed(ctx, "b")
    value = semi_transvectant(a0, semi_transvectant(a0, b0, 2), n)
    closed = {variant: closed_tr_bar_joint2(n, variant) for variant in TR_BAR_VARIANTS}
    return _cross_check(value, closed)


@trace_function(name="catalog.tr_joint3")
def tr_joint3(n: int, series: Sequence[str] = ("a", "b", "c")) -> CrossChecked:
    """Tr_n(a0, b0, c0) = [a0, [b0, c0]]^n."""
    require_order("tr3", n)
    a, b, c = series
    ctx = FormContext(n, tuple(series))
    jacobian = semi_jacobian(seed(ctx, b), seed(ctx, c))
    value = semi_transvectant(seed(ctx, a), jacobian, n)
    return _cross_check(value, {"printed": closed_tr_joint3(n, series)})


def delta3x3(n: int, s1: str = "b", s2: str = "c", s3: str = "d") -> SemiInvariant:
    """det [[s1_0, s2_0, s3_0], [s1_1, s2_1, s3_1], [s1_2, s2_2, s3_2]], weight 3n - 6."""
    require_order("delta3", n)
    series = (s1, s2, s3)
    ctx = FormContext(n, series)
    if len(set(series)) < 3:
        logger.warning(f"delta3x3 with repeated series {series} is degenerate (zero)")
    value = det([[ctx.coefficient(s, row) for s in series] for row in range(3)])
    return SemiInvariant.certify(value, ctx, degree=3, weight_hint=3 * n - 6)


@trace_function(name="catalog.ch_joint4")
def ch_joint4(n: int) -> CrossChecked:
    """Ch_n(a0, b0, c0, d0) = [a0, Delta(b, c, d)]^n."""
    require_order("ch4", n)
    ctx = FormContext(n, ("a", "b", "c", "d"))
    value = semi_transvectant(seed(ctx, "a"), delta3x3(n, "b", "c", "d"), n)
    return _cross_check(value, {"printed": closed_ch_joint4(n)})


def ch_joint4_header(n: int) -> SemiInvariant:
    """[d0, Delta(b, c, d)]^n, the variant named by the section header."""
    require_order("ch4", n)
    ctx = FormContext(n, ("b", "c", "d"))
    return semi_transvectant(seed(ctx, "d"), delta3x3(n, "b", "c", "d"), n)


def describe(value: SemiInvariant) -> str:
    return (
        f"degree={value.degree} weight={value.weight} ord={value.order} "
        f"proper={'yes' if value.proper else 'no'}: {format_polynomial(value.poly)}"
    )
