"""
Tests for polynomial-entry determinants: cofactor expansion, Bareiss elimination
and the dispatching det.
"""
import pytest

from error_handling import ShapeError
from exact_poly import Polynomial, bareiss_det, cofactor_det, det, series_var

a = [Polynomial.var(series_var("a", i)) for i in range(10)]
b = [Polynomial.var(series_var("b", i)) for i in range(10)]


def _random_matrix(rng, size):
    """Sparse integer-linear entries in a few variables."""
    rows = []
    for _ in range(size):
        row = []
        for _ in range(size):
            entry = Polynomial.constant(rng.randint(-3, 3))
            if rng.random() < 0.6:
                entry = entry + a[rng.randrange(4)] * rng.randint(-2, 2)
            row.append(entry)
        rows.append(row)
    return rows


@pytest.mark.unit
class TestDeterminant:
    """Exact determinants of small and medium matrices."""

    def test_two_by_two(self):
        assert det([[a[0], a[1]], [a[1], a[2]]]) == a[0] * a[2] - a[1] ** 2

    def test_scalar_entries(self):
        assert det([[2, 1], [1, 2]]) == Polynomial.constant(3)
        assert det([]) == Polynomial.one()

    def test_non_square_raises(self):
        with pytest.raises(ShapeError):
            det([[a[0], a[1]], [a[2]]])

    def test_bareiss_pivot_swap(self):
        matrix = [[0, 1, 0], [1, 0, 0], [0, 0, a[0]]]
        assert bareiss_det(matrix) == -a[0]
        assert cofactor_det(matrix) == -a[0]

    def test_singular_matrix(self):
        matrix = [[a[0], a[1], a[2]], [a[0], a[1], a[2]], [b[0], b[1], b[2]]]
        assert bareiss_det(matrix).is_zero()

    @pytest.mark.parametrize("size", [3, 4, 5])
    def test_bareiss_agrees_with_cofactor(self, rng, size):
        for _ in range(4):
            matrix = _random_matrix(rng, size)
            assert bareiss_det(matrix) == cofactor_det(matrix)

    def test_vandermonde(self):
        """prod_(i<j) (x_j - x_i) for five symbolic nodes."""
        nodes = [a[0], a[1], a[2], b[0], b[1]]
        matrix = [[node ** k for k in range(5)] for node in nodes]
        expected = Polynomial.one()
        for i in range(5):
            for j in range(i + 1, 5):
                expected = expected * (nodes[j] - nodes[i])
        assert det(matrix) == expected

    def test_debug_cross_check_runs(self, debug_checks, rng):
        matrix = _random_matrix(rng, 5)
        assert det(matrix) == cofactor_det(matrix)


@pytest.mark.slow
def test_seven_by_seven_bareiss():
    """The n=4 Sylvester discriminant matrix goes through Bareiss and stays exact."""
    from catalog import sylvester_discriminant_matrix

    matrix = sylvester_discriminant_matrix(4)
    assert len(matrix) == 7
    value = det(matrix)
    assert value.degree() == 7
    assert not value.is_zero()
