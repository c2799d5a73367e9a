"""
Tests for the Appell families and the substitution homomorphism phi.

sympy serves as an independent oracle for the Bernoulli and Euler polynomials.
"""
import json
from fractions import Fraction

import pytest
import sympy

from error_handling import DomainError, MissingBindingError, UsageError
from exact_poly import APPELL_X, Polynomial, parse_polynomial
from forms import FormContext, derive_D
from appell import AppellFamily, FamilyName, family_norm, family_poly, get_family, parse_assignment, parse_family, phi

X_SYMBOL = sympy.Symbol("x")


def _to_sympy(p: Polynomial):
    total = sympy.Integer(0)
    for monomial, coefficient in p.terms.items():
        power = dict(monomial).get(APPELL_X, 0)
        total += sympy.Rational(coefficient.numerator, coefficient.denominator) * X_SYMBOL ** power
    return sympy.expand(total)


@pytest.mark.unit
class TestFamilies:
    """Recurrences and initial values."""

    @pytest.mark.parametrize("family, k, text", [
        ("B", 2, "x^2 - x + 1/6"),
        ("E", 2, "x^2 - x"),
        ("E", 3, "x^3 - 3/2*x^2 + 1/4"),
        ("H", 2, "x^2 - 1"),
        ("H", 3, "x^3 - 3*x"),
        ("H", 4, "x^4 - 6*x^2 + 3"),
        ("T", 0, "1"),
        ("T", 5, "x^5"),
    ])
    def test_small_polynomials(self, family, k, text):
        assert family_poly(family, k) == parse_polynomial(text)

    @pytest.mark.parametrize("name", ["B", "E", "H", "T"])
    def test_appell_property(self, name):
        assert get_family(name).check_appell_property(32)

    def test_bernoulli_against_sympy(self):
        for k in range(0, 16):
            assert sympy.expand(_to_sympy(family_poly("B", k)) - sympy.bernoulli(k, X_SYMBOL)) == 0

    def test_euler_against_sympy(self):
        for k in range(0, 16):
            assert sympy.expand(_to_sympy(family_poly("E", k)) - sympy.euler(k, X_SYMBOL)) == 0

    def test_euler_numbers_convention(self):
        """E_n = E_n(0), not the secant numbers."""
        expected = {1: Fraction(-1, 2), 3: Fraction(1, 4), 5: Fraction(-1, 2), 7: Fraction(17, 8),
                    9: Fraction(-31, 2), 11: Fraction(691, 4)}
        for k, value in expected.items():
            assert family_norm("E", k) == value
        assert family_norm("E", 2) == 0

    def test_bernoulli_numbers(self):
        assert family_norm("B", 1) == Fraction(-1, 2)
        assert family_norm("B", 4) == Fraction(-1, 30)
        assert family_norm("B", 12) == Fraction(-691, 2730)

    def test_hermite_probabilists(self):
        h = get_family("H")
        assert (h.poly(0) * h.poly(2) - h.poly(1) ** 2) == Polynomial.constant(-1)

    def test_negative_index(self):
        with pytest.raises(DomainError):
            family_poly("B", -1)

    def test_parse_family(self):
        assert parse_family(" b ") is FamilyName.B
        with pytest.raises(UsageError):
            parse_family("Q")


@pytest.mark.unit
class TestFamilyCache:
    """JSON persistence of grown families."""

    def test_save_and_load(self, tmp_path):
        family = AppellFamily(FamilyName.B)
        family.poly(8)
        path = family.save(str(tmp_path))
        assert path.name == "appell_B.json"

        fresh = AppellFamily(FamilyName.B)
        assert fresh.load(str(tmp_path)) == 9
        assert fresh.poly(8) == family.poly(8)
        assert fresh.poly(10) == family.poly(10)

    def test_missing_cache(self, tmp_path):
        assert AppellFamily(FamilyName.E).load(str(tmp_path)) == 0

    def test_corrupt_cache_is_ignored(self, tmp_path):
        (tmp_path / "appell_H.json").write_text("{not json")
        family = AppellFamily(FamilyName.H)
        assert family.load(str(tmp_path)) == 0
        assert family.poly(2) == parse_polynomial("x^2 - 1")

    def test_cache_failing_appell_check_is_ignored(self, tmp_path):
        payload = {"family": "T", "polys": [{"terms": [{"coeff": "1", "powers": {}}]},
                                            {"terms": [{"coeff": "2", "powers": {"x": 1}}]}]}
        (tmp_path / "appell_T.json").write_text(json.dumps(payload))
        family = AppellFamily(FamilyName.T)
        assert family.load(str(tmp_path)) == 0
        assert family.poly(1) == parse_polynomial("x")


@pytest.mark.unit
class TestPhi:
    """The substitution homomorphism."""

    def test_semi_hessian_images(self):
        h = parse_polynomial("a0*a2 - a1^2")
        expected = {"B": Fraction(-1, 12), "E": Fraction(-1, 4), "H": Fraction(-1), "T": Fraction(0)}
        for family, norm in expected.items():
            assert phi(h, parse_assignment([f"a={family}"])) == Polynomial.constant(norm)

    def test_non_semi_invariant_is_not_constant(self):
        for family in "BEHT":
            image = phi(parse_polynomial("a1"), parse_assignment({"a": family}))
            assert not image.diff_x().is_zero()

    def test_missing_series(self):
        with pytest.raises(MissingBindingError) as exc:
            phi(parse_polynomial("a0*b1"), parse_assignment(["a=B"]))
        assert exc.value.variables == ["b1"]

    def test_covariant_variables_are_rejected(self):
        with pytest.raises(MissingBindingError):
            phi(parse_polynomial("a0*X"), parse_assignment(["a=B"]))

    def test_bad_assignment(self):
        with pytest.raises(UsageError):
            parse_assignment(["a:B"])
        with pytest.raises(UsageError):
            parse_assignment(["e=B"])

    @pytest.mark.parametrize("family", ["B", "E", "H", "T"])
    def test_phi_commutes_with_D(self, rng, family):
        """phi(D h) = d/dx phi(h) for random coefficient polynomials."""
        assignment = parse_assignment({"a": family})
        for _ in range(50):
            order = rng.randint(1, 6)
            ctx = FormContext(order, ("a",))
            variables = ctx.variables()
            h = Polynomial.zero()
            for _ in range(rng.randint(1, 4)):
                term = Polynomial.constant(rng.randint(-3, 3))
                for _ in range(rng.randint(1, 4)):
                    term = term * Polynomial.var(rng.choice(variables))
                h = h + term
            assert phi(derive_D(h, ctx), assignment) == phi(h, assignment).diff_x()
