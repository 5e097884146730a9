from fractions import Fraction

import pytest

from ctrace.qlinalg import QMatrix, apply, kernel_basis, rank
from ctrace.shared import ShapeError


class TestQMatrix:
    """Exact rank, kernel and products on small hand-checked matrices"""

    def test_rank_examples(self):
        assert rank(QMatrix.from_rows([[1, 2], [2, 4]])) == 1
        assert rank(QMatrix.from_rows([[1, 0], [0, 1]])) == 2
        assert rank(QMatrix.zeros(3, 4)) == 0
        assert rank(QMatrix.from_rows([[0, 1, 2], [0, 2, 4], [1, 0, 0]])) == 2

    def test_rank_with_fractions(self):
        m = QMatrix.from_rows([["1/2", "1/3"], ["3/2", 1]])
        assert m.rank == 1

    def test_rank_needs_row_swap(self):
        """First column has no pivot in row 0"""

        m = QMatrix.from_rows([[0, 0, 1], [0, 3, 0], [2, 0, 0]])
        assert m.rank == 3

    def test_empty_shapes(self):
        assert QMatrix.zeros(0, 3).rank == 0
        assert QMatrix.zeros(0, 3).nullity == 3
        assert QMatrix.zeros(2, 0).kernel_basis == ()
        assert QMatrix.from_rows([], cols=2).shape == (0, 2)

    def test_kernel_basis_example(self):
        """Kernel of [[1, 2]] is spanned by (-2, 1)"""

        assert kernel_basis(QMatrix.from_rows([[1, 2]])) == (
            (Fraction(-2), Fraction(1)),
        )

    def test_kernel_basis_free_columns_ascending(self):
        m = QMatrix.from_rows([[1, 0, 2, 3], [0, 1, 4, 5]])
        basis = m.kernel_basis
        assert basis == (
            (Fraction(-2), Fraction(-4), Fraction(1), Fraction(0)),
            (Fraction(-3), Fraction(-5), Fraction(0), Fraction(1)),
        )
        for v in basis:
            assert all(x == 0 for x in m.apply(v))

    def test_apply(self):
        m = QMatrix.from_rows([[1, 2], [3, 4]])
        assert apply(m, [1, "1/2"]) == (Fraction(2), Fraction(5))

    def test_apply_shape_error(self):
        with pytest.raises(ShapeError):
            QMatrix.identity(2).apply([1, 2, 3])

    def test_matmul(self):
        a = QMatrix.from_rows([[1, 2], [3, 4]])
        b = QMatrix.from_rows([[0, 1], [1, 0]])
        assert a @ b == QMatrix.from_rows([[2, 1], [4, 3]])
        assert a @ QMatrix.identity(2) == a
        with pytest.raises(ShapeError):
            a @ QMatrix.zeros(3, 1)

    def test_transpose(self):
        m = QMatrix.from_rows([[1, 2, 3]])
        assert m.transpose() == QMatrix.from_rows([[1], [2], [3]])
        assert m.transpose().transpose() == m

    def test_rref(self):
        reduced, pivots = QMatrix.from_rows([[2, 4], [1, 3]]).rref()
        assert reduced == QMatrix.identity(2)
        assert pivots == (0, 1)

    def test_rref_with_fractions(self):
        reduced, pivots = QMatrix.from_rows([["1/2", 1, 0], [1, 2, "1/3"]]).rref()
        assert reduced == QMatrix.from_rows([[1, 2, 0], [0, 0, 1]])
        assert pivots == (0, 2)

    def test_domain_matrix_round_trip(self):
        m = QMatrix.from_rows([["-1/2", 3], [0, "7/5"]])
        assert m.domain_matrix.shape == (2, 2)
        assert QMatrix.from_domain_matrix(m.domain_matrix) == m

    @pytest.mark.parametrize(
        "rows, cols, entries",
        [(2, 2, [1, 2, 3]), (-1, 2, [])],
    )
    def test_shape_errors(self, rows, cols, entries):
        with pytest.raises(ShapeError):
            QMatrix(rows, cols, entries)

    def test_ragged_rows(self):
        with pytest.raises(ShapeError):
            QMatrix.from_rows([[1, 2], [3]])

    def test_entries_lowest_terms(self):
        m = QMatrix.from_rows([["2/4", "-3/9"]])
        assert m.entries == (Fraction(1, 2), Fraction(-1, 3))
        assert all(x.denominator > 0 for x in m.entries)

    def test_json(self):
        m = QMatrix.from_rows([["1/2", 0], [-3, "4/2"]])
        assert m.to_json() == {
            "rows": 2,
            "cols": 2,
            "entries": [["1/2", "0"], ["-3", "2"]],
        }
        assert QMatrix.from_json(m.to_json()) == m

    def test_kernel_of_sum(self):
        (v,) = QMatrix.from_rows([[1, 1]]).kernel_basis
        assert v == (Fraction(-1), Fraction(1))
        assert QMatrix.identity(2).kernel_basis == ()
        assert len(QMatrix.zeros(2, 3).kernel_basis) == 3

    def test_apply_examples(self):
        assert QMatrix.identity(2).apply(["1/2", 3]) == (Fraction(1, 2), Fraction(3))
        diagonal = QMatrix.from_rows([[2, 0], [0, 3]])
        assert diagonal.apply(["1/2", "1/3"]) == (Fraction(1), Fraction(1))
