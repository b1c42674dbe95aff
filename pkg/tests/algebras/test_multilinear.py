import random
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies

from src.mixins.LeibnizMixin import LeibnizMixin
from src.mixins.MultilinearMixin import MultilinearMixin
from src.models import MatrixQ, PartSymMap, SymForm, add, scale
from tests.base import BaseTestCase, non_lie_leibniz

vectors3 = strategies.lists(strategies.integers(min_value=-4, max_value=4), min_size=3, max_size=3)


def double_bracket(alg):
    """y -> [x, [x, y]] as a matrix valued diagonal"""

    def diag_matrix(x):
        ad = alg.ad(x)
        return ad.compose(ad)

    return diag_matrix


class TestMultilinear(BaseTestCase):

    def test_polarize_bracket(self):
        """ The polar form of y -> [x, y] is the bracket itself """
        sl2 = self.sl2
        polar = MultilinearMixin.polarize(lambda x, y: sl2.bracket(x, y), 1, 3)
        self.assertEqual(polar, MultilinearMixin.bracket_map(sl2))

    def test_polarize_double_bracket(self):
        """ A(u, v, y) = 1/2 ([u,[v,y]] + [v,[u,y]]) """
        sl2 = self.sl2
        polar = MultilinearMixin.polarize_matrix(double_bracket(sl2), 2, 3)
        u, v, y = (1, 2, 0), (0, 1, -1), (Fraction(1, 2), 0, 3)
        expected = scale(Fraction(1, 2), add(sl2.bracket(u, sl2.bracket(v, y)),
                                             sl2.bracket(v, sl2.bracket(u, y))))
        self.assertEqual(MultilinearMixin.eval(polar, [u, v], y), expected)
        self.assertEqual(MultilinearMixin.verify_polarization(polar, double_bracket(sl2)), [])

    def test_polarization_recovers_random_maps(self):
        """ Polarizing the diagonal of a random map of degree at most 4 gives the map back """
        rng = random.Random(11)
        for _ in range(20):
            n, dim = rng.randint(1, 4), rng.randint(2, 3)
            keys = [(tuple(rng.randint(0, dim - 1) for _ in range(n)), rng.randint(0, dim - 1))
                    for _ in range(rng.randint(1, 5))]
            map_ = PartSymMap(n, dim, {key: tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                                  for _ in range(dim))
                                       for key in keys})
            self.assertEqual(MultilinearMixin.polarize_matrix(map_.diagonal_matrix, n, dim), map_)

    def test_verify_polarization_reports_mismatch(self):
        """ A wrong diagonal is caught on the grid """
        polar = MultilinearMixin.polarize_matrix(double_bracket(self.sl2), 2, 3)
        mismatches = MultilinearMixin.verify_polarization(
            polar, lambda x: double_bracket(self.sl2)(x).scaled(2))
        self.assertTrue(mismatches)

    def test_polarize_trace_form(self):
        """ The scalar polar form of <x, x> is the gram matrix """
        sl2 = self.sl2
        form = MultilinearMixin.polarize_form(lambda x: LeibnizMixin.trace_form(sl2, x, x), 2, 3,
                                              is_vector=False)
        self.assertEqual(form.value((0, 0)), 4)
        self.assertEqual(form.value((1, 2)), 2)
        self.assertEqual(form.value((1, 1)), 0)

    def test_bracket_map_is_invariant(self):
        """ The left Leibniz identity is invariance of the bracket """
        for alg in (self.sl2, self.heisenberg, non_lie_leibniz()):
            self.assertTrue(MultilinearMixin.is_invariant(alg, MultilinearMixin.bracket_map(alg)))

    def test_trace_form_is_invariant(self):
        """ <[x, y1], y2> + <y1, [x, y2]> = 0 on sl2 and so3 """
        for alg in (self.sl2, self.so3):
            gram = LeibnizMixin.gram_matrix(alg)
            form = SymForm(2, 3, {(i, j): gram.entries[i][j] for i in range(3) for j in range(i, 3)})
            self.assertTrue(MultilinearMixin.is_invariant(alg, form))

    def test_lone_square_is_not_invariant(self):
        """ x -> x_h^2 is not invariant on sl2 """
        form = SymForm(2, 3, {(0, 0): 1})
        self.assertFalse(MultilinearMixin.is_invariant(self.sl2, form))
        derivative = MultilinearMixin.lie_derivative(self.sl2, form, self.sl2.e(1))
        # -P([e, f], h) with [e, f] = h
        self.assertEqual(derivative.eval([self.sl2.e(2), self.sl2.e(0)]), -1)

    def test_identity_component(self):
        """ The arity zero map is y -> y """
        identity = PartSymMap.identity(3)
        self.assertEqual(identity.diagonal((1, 2, 3), (4, 5, 6)), (4, 5, 6))
        self.assertEqual(identity.diagonal_matrix((1, 2, 3)), MatrixQ.identity(3))

    @settings(max_examples=25, deadline=None)
    @given(vectors3, vectors3, vectors3)
    def test_polar_form_is_symmetric(self, u, v, y):
        """ Swapping the symmetric arguments leaves the value unchanged """
        polar = MultilinearMixin.polarize_matrix(double_bracket(self.so3), 2, 3)
        self.assertEqual(polar.eval([u, v], y), polar.eval([v, u], y))
        self.assertEqual(polar.eval([u, u], y), polar.diagonal(u, y))


if __name__ == '__main__':
    unittest.main()
