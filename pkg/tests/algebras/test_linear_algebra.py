import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies

from src.exceptions import DimensionMismatchException
from src.mixins.LinearAlgebraMixin import LinearAlgebraMixin
from src.models import MatrixQ, NoSolution, Unique, Affine, Subspace, basis_vector, is_zero
from tests.base import BaseTestCase

small_matrices = strategies.integers(min_value=1, max_value=4).flatmap(
    lambda cols: strategies.lists(
        strategies.lists(strategies.integers(min_value=-3, max_value=3), min_size=cols,
                         max_size=cols),
        min_size=1, max_size=4))


class TestLinearAlgebra(BaseTestCase):

    def test_rank_of_dependent_rows(self):
        """ Proportional rows count once """
        self.assertEqual(LinearAlgebraMixin.rank([[1, 2], [2, 4]]), 1)
        self.assertEqual(LinearAlgebraMixin.rank(MatrixQ.identity(3)), 3)

    def test_kernel_basis_is_annihilated(self):
        """ Every kernel vector is sent to zero """
        matrix = MatrixQ([[1, 1, 0], [0, 0, 1]])
        kernel = LinearAlgebraMixin.kernel_basis(matrix)
        self.assertEqual(len(kernel), 1)
        for v in kernel:
            self.assertTrue(is_zero(matrix.apply(v)))
            self.assertFalse(is_zero(v))

    def test_solve_unique(self):
        """ Invertible systems have one solution """
        solution = LinearAlgebraMixin.solve_linear([[2, 0], [0, 3]], (4, 1))
        self.assertEqual(solution, Unique((Fraction(2), Fraction(1, 3))))

    def test_solve_inconsistent(self):
        """ Contradictory equations give NoSolution """
        solution = LinearAlgebraMixin.solve_linear([[1, 1], [1, 1]], (1, 2))
        self.assertIsInstance(solution, NoSolution)

    def test_solve_affine_family(self):
        """ Underdetermined systems give a particular solution plus a kernel """
        matrix = MatrixQ([[1, 1]])
        solution = LinearAlgebraMixin.solve_linear(matrix, (2,))
        self.assertIsInstance(solution, Affine)
        self.assertEqual(matrix.apply(solution.particular), (2,))
        self.assertEqual(len(solution.kernel), 1)

    def test_solve_rejects_short_rhs(self):
        """ The right hand side must have one entry per row """
        with self.assertRaises(DimensionMismatchException):
            LinearAlgebraMixin.solve_linear([[1, 0], [0, 1]], (1,))

    def test_intersection_of_planes(self):
        """ span(e1, e2) and span(e2, e3) meet in the e2 line """
        e1, e2, e3 = (basis_vector(3, i) for i in range(3))
        first = LinearAlgebraMixin.span([e1, e2], 3)
        second = LinearAlgebraMixin.span([e2, e3], 3)
        meet = LinearAlgebraMixin.intersection(first, second)
        self.assertEqual(meet.dim, 1)
        self.assertTrue(LinearAlgebraMixin.contains(meet, e2))
        self.assertFalse(LinearAlgebraMixin.contains(meet, e1))

    def test_orthogonal_complement(self):
        """ The complement of a line in R^3 is a plane orthogonal to it """
        line = LinearAlgebraMixin.span([(1, 1, 0)], 3)
        complement = LinearAlgebraMixin.orthogonal_complement(line)
        self.assertEqual(complement.dim, 2)
        self.assertTrue(LinearAlgebraMixin.is_orthogonal((1, 1, 0), complement))
        self.assertEqual(LinearAlgebraMixin.orthogonal_complement(Subspace(3)).dim, 3)

    def test_span_drops_dependent_vectors(self):
        """ Only independent generators enter the basis """
        subspace = LinearAlgebraMixin.span([(1, 0), (2, 0), (0, 1)], 2)
        self.assertEqual(subspace.dim, 2)

    def test_coordinates(self):
        """ Coefficients in a basis, None outside its span """
        basis = [(1, 1, 0), (0, 1, 1)]
        self.assertEqual(LinearAlgebraMixin.coordinates(basis, (2, 5, 3)), (2, 3))
        self.assertIsNone(LinearAlgebraMixin.coordinates(basis, (1, 0, 0)))

    @settings(max_examples=40, deadline=None)
    @given(small_matrices)
    def test_rank_equals_rank_of_transpose(self, rows):
        """ Row rank and column rank agree """
        matrix = MatrixQ(rows)
        self.assertEqual(LinearAlgebraMixin.rank(matrix), LinearAlgebraMixin.rank(matrix.transpose()))
        self.assertEqual(LinearAlgebraMixin.rank(matrix) + len(LinearAlgebraMixin.kernel_basis(matrix)),
                         matrix.cols)


if __name__ == '__main__':
    unittest.main()
