"""
Tests for FormContext, the derivations D, D*, E and their twisted variants, and the
classification predicates.
"""
import pytest

from error_handling import ContextError, ErrorCode, PreconditionError
from exact_poly import COV_X, COV_Y, Polynomial, parse_polynomial, series_var
from forms import (
    FormContext,
    classify,
    derive_D,
    derive_Dstar,
    derive_E,
    generic_form,
    homogeneous_degree,
    is_covariant,
    is_invariant,
    is_proper,
    is_semi_invariant,
    iterate,
    order_of,
    printed_weight,
    twisted_D,
    twisted_Dstar,
    weight,
)


def _random_poly(rng, ctx, terms=4, max_degree=3):
    variables = ctx.variables()
    total = Polynomial.zero()
    for _ in range(terms):
        monomial = Polynomial.constant(rng.randint(-4, 4))
        for _ in range(rng.randint(1, max_degree)):
            monomial = monomial * Polynomial.var(rng.choice(variables))
        total = total + monomial
    return total


@pytest.mark.unit
class TestFormContext:
    """Context validation."""

    def test_series_are_normalized(self):
        ctx = FormContext(3, ("c", "a", "a"))
        assert ctx.active_series == ("a", "c")
        assert len(ctx.variables()) == 8

    @pytest.mark.parametrize("order, series", [(0, ("a",)), (2, ()), (2, ("e",))])
    def test_invalid_context(self, order, series):
        with pytest.raises(ContextError):
            FormContext(order, series)

    def test_inactive_series(self, ctx2):
        with pytest.raises(ContextError) as exc:
            derive_D(parse_polynomial("b0*a1"), ctx2)
        assert exc.value.code == ErrorCode.CONTEXT_ERROR

    def test_index_beyond_order(self, ctx2):
        with pytest.raises(ContextError):
            derive_D(parse_polynomial("a3"), ctx2)

    def test_parse_checks_order(self, ctx2):
        assert ctx2.parse("a0*a2 - a1^2") == parse_polynomial("a0*a2 - a1^2")


@pytest.mark.unit
class TestDerivations:
    """Action of D, D* and E on generators and products."""

    def test_generators(self, ctx3):
        a = [Polynomial.var(series_var("a", i)) for i in range(4)]
        assert derive_D(a[2], ctx3) == a[1] * 2
        assert derive_D(a[0], ctx3).is_zero()
        assert derive_Dstar(a[1], ctx3) == a[2] * 2
        assert derive_Dstar(a[3], ctx3).is_zero()
        assert derive_E(a[0], ctx3) == a[0] * 3
        assert derive_E(a[3], ctx3) == a[3] * -3

    def test_leibniz_rule(self, ctx3, rng):
        for _ in range(10):
            p, q = _random_poly(rng, ctx3), _random_poly(rng, ctx3)
            assert derive_D(p * q, ctx3) == derive_D(p, ctx3) * q + p * derive_D(q, ctx3)

    @pytest.mark.parametrize("order", [2, 3, 5])
    def test_commutator_is_E(self, order, rng):
        ctx = FormContext(order, ("a", "b"))
        for _ in range(8):
            p = _random_poly(rng, ctx)
            commutator = derive_D(derive_Dstar(p, ctx), ctx) - derive_Dstar(derive_D(p, ctx), ctx)
            assert commutator == derive_E(p, ctx)

    def test_weight_is_E_eigenvalue(self, ctx3):
        p = parse_polynomial("a0^2*a3 - 3*a0*a1*a2 + 2*a1^3")
        assert weight(p, ctx3) == 3
        assert derive_E(p, ctx3) == p * 3

    def test_iterate(self, ctx3):
        a0 = parse_polynomial("a0")
        assert iterate(derive_Dstar, a0, ctx3, 3) == parse_polynomial("6*a3")
        assert iterate(derive_Dstar, a0, ctx3, 4).is_zero()

    def test_twisted_derivations_kill_generic_form(self):
        for order in (1, 2, 4):
            ctx = FormContext(order, ("a",))
            f = generic_form(ctx)
            assert twisted_D(f, ctx).is_zero()
            assert twisted_Dstar(f, ctx).is_zero()
            assert is_covariant(f, ctx)

    def test_twisted_action_on_X_Y(self, ctx2):
        X, Y = Polynomial.var(COV_X), Polynomial.var(COV_Y)
        assert twisted_D(X, ctx2) == -Y
        assert twisted_Dstar(Y, ctx2) == -X


@pytest.mark.unit
class TestClassification:
    """Predicates, weight, ord and the Classification model."""

    def test_quadratic_discriminant_is_invariant(self, ctx2):
        p = parse_polynomial("a0*a2 - a1^2")
        assert is_semi_invariant(p, ctx2)
        assert is_invariant(p, ctx2)
        assert weight(p, ctx2) == 0
        assert order_of(p, ctx2) == 0
        assert is_proper(p, ctx2)

    def test_a1_is_not_semi_invariant(self, ctx2):
        result = classify(parse_polynomial("a1"), ctx2)
        assert not result.semi_invariant
        assert result.d_image == "a0"
        assert result.order is None

    def test_W2_as_printed(self, ctx2):
        w2 = parse_polynomial("-2*a1^2 + a0*a1^2")
        result = classify(w2, ctx2)
        assert not result.semi_invariant
        assert not result.homogeneous
        assert result.d_image == "2*a0^2*a1 - 4*a0*a1"

    def test_order_of_seed(self):
        for order in (1, 3, 6):
            ctx = FormContext(order, ("a",))
            assert order_of(parse_polynomial("a0"), ctx) == order

    def test_order_matches_iterated_Dstar(self, debug_checks, ctx3):
        p = parse_polynomial("a0*a2 - a1^2")
        assert order_of(p, ctx3) == 2

    def test_order_needs_semi_invariant(self, ctx2):
        with pytest.raises(PreconditionError):
            order_of(parse_polynomial("a1"), ctx2)
        with pytest.raises(PreconditionError):
            order_of(Polynomial.zero(), ctx2)

    def test_weight_of_zero_raises(self, ctx2):
        with pytest.raises(PreconditionError):
            weight(Polynomial.zero(), ctx2)

    def test_not_isobaric(self, ctx2):
        assert weight(parse_polynomial("a0 + a1"), ctx2) is None
        assert homogeneous_degree(parse_polynomial("a0 + a1^2")) is None

    def test_printed_weight_differs(self, ctx2):
        """The printed weight formula is not constant on the quadratic discriminant."""
        p = parse_polynomial("a0*a2 - a1^2")
        assert printed_weight(p, ctx2) is None
        assert printed_weight(parse_polynomial("a0"), ctx2) == weight(parse_polynomial("a0"), ctx2)

    def test_properness(self, ctx3):
        assert not is_proper(parse_polynomial("a0*a2 - a1^2"), ctx3)
        assert is_proper(parse_polynomial("a0^2*a3 - 3*a0*a1*a2 + 2*a1^3"), ctx3)

    def test_classification_serializes(self, ctx2):
        payload = classify(parse_polynomial("a0"), ctx2).model_dump(mode="json")
        assert payload["semi_invariant"] is True
        assert payload["weight"] == 2
        assert payload["order"] == 2
        assert payload["covariant"] is False
