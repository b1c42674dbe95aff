import random
import unittest
from fractions import Fraction
from itertools import product

from src.exceptions import (DegreeBoundException, NoBracketFormException,
                            NonUniqueSolutionException, NotACocycleException)
from src.mixins.CohomologyMixin import CohomologyMixin
from src.mixins.LeibnizMixin import LeibnizMixin
from src.mixins.RackSeriesMixin import RackSeriesMixin
from src.models import Cochain, MatrixQ
from tests.base import BaseTestCase, non_lie_leibniz


def random_cochain(rng, degree, dim):
    return Cochain(degree, dim, {t: tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))
                                 for t in product(range(dim), repeat=degree)})


def random_matrix(rng, dim):
    return MatrixQ([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)])


class TestCohomology(BaseTestCase):

    def test_delta_squared_vanishes(self):
        """ delta o delta = 0 on random cochains of degree 0 and 1 """
        rng = random.Random(7)
        for alg in (self.sl2, self.so3, self.abelian3, self.heisenberg, self.nilpotent4,
                    non_lie_leibniz()):
            for degree in (0, 1):
                for _ in range(20):
                    w = random_cochain(rng, degree, alg.dim)
                    twice = CohomologyMixin.delta(alg, CohomologyMixin.delta(alg, w))
                    self.assertTrue(twice.is_zero(), (alg, degree))

    def test_delta_squared_matrices(self):
        """ The composite of consecutive delta matrices is zero """
        for alg in (self.sl2, self.heisenberg):
            for degree in (0, 1):
                first = CohomologyMixin.delta_matrix(alg, degree)
                second = CohomologyMixin.delta_matrix(alg, degree + 1)
                self.assertTrue(second.compose(first).is_zero())

    def test_delta_degree_zero(self):
        """ delta(m)(x) = -[m, x] """
        h, e, _ = LeibnizMixin.basis(self.sl2)
        image = CohomologyMixin.delta(self.sl2, Cochain.from_vector(h))
        self.assertEqual(image.degree, 1)
        self.assertEqual(image.value((1,)), (0, -2, 0))

    def test_delta_of_identity_is_the_bracket(self):
        """ delta(F)(y, z) = [y, Fz] + [Fy, z] - F[y, z] gives [y, z] for F = Id """
        image = CohomologyMixin.delta(self.sl2, Cochain.from_matrix(MatrixQ.identity(3)))
        for a, b in product(range(3), repeat=2):
            self.assertEqual(image.value((a, b)), self.sl2.c[a][b])

    def test_degree_bound(self):
        """ Degree 4 cochains are out of range """
        with self.assertRaises(DegreeBoundException):
            CohomologyMixin.delta(self.sl2, Cochain(4, 3))

    def test_cohomology_dims(self):
        """ sl2 and so3 are acyclic in low degree, abelian algebras are not """
        self.assertEqual(CohomologyMixin.cohomology_dims(self.sl2), (0, 0))
        self.assertEqual(CohomologyMixin.cohomology_dims(self.so3), (0, 0))
        self.assertEqual(CohomologyMixin.cohomology_dims(self.abelian3), (3, 9))
        self.assertEqual(CohomologyMixin.cohomology_dims(self.heisenberg)[0], 1)

    def test_solve_coboundary_inner(self):
        """ ad_b is solved back to b """
        b = (1, Fraction(1, 2), -3)
        self.assertEqual(CohomologyMixin.solve_coboundary(self.sl2, self.sl2.ad(b)), b)

    def test_solve_coboundary_rejects_non_cocycle(self):
        """ The identity of sl2 is not a derivation """
        with self.assertRaises(NotACocycleException) as context:
            CohomologyMixin.solve_coboundary(self.sl2, MatrixQ.identity(3))
        self.assertIn('args', context.exception.witness)

    def test_solve_coboundary_outer_derivation(self):
        """ e1 -> e1, e3 -> e3 is a derivation of heisenberg that is not inner """
        D = MatrixQ([[1, 0, 0], [0, 0, 0], [0, 0, 1]])
        with self.assertRaises(NoBracketFormException):
            CohomologyMixin.solve_coboundary(self.heisenberg, D)

    def test_solve_coboundary_non_unique(self):
        """ On an abelian algebra every b gives the zero map """
        with self.assertRaises(NonUniqueSolutionException) as context:
            CohomologyMixin.solve_coboundary(self.abelian3, MatrixQ.zero(3, 3))
        self.assertEqual(len(context.exception.kernel), 3)

    def test_composition_rule(self):
        """ delta(F o G) expands through delta(F) and delta(G) """
        rng = random.Random(11)
        for _ in range(20):
            F, G = random_matrix(rng, 3), random_matrix(rng, 3)
            result = CohomologyMixin.check_composition_rule(self.sl2, F, G)
            self.assertTrue(result.ok, result.details)

    def test_eqc_on_canonical_series(self):
        """ The coboundary equations hold for exp(ad_x) """
        series = RackSeriesMixin.canonical_series(self.sl2, 3)
        for p in range(1, 4):
            self.assertTrue(CohomologyMixin.check_eqc(series, p).ok)

    def test_eqc_detects_scaled_component(self):
        """ Doubling A_2 breaks the degree 2 coboundary equation """
        series = RackSeriesMixin.canonical_series(self.sl2, 2)
        broken = series.replaced(2, series.component(2).scaled(2))
        result = CohomologyMixin.check_eqc(broken, 2)
        self.assertFalse(result.ok)
        self.assertEqual(result.name, 'eqc[2]')


if __name__ == '__main__':
    unittest.main()
