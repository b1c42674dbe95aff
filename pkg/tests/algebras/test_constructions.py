import unittest
from fractions import Fraction

import numpy

from src.exceptions import (CommutationException, HypothesisException, MalformedInputException,
                            NonInvariantFormException)
from src.mixins.ConstructionsMixin import ConstructionsMixin, polynomial, structure_tensor
from src.mixins.InvariantsMixin import InvariantsMixin
from src.mixins.LeibnizMixin import LeibnizMixin
from src.models import FloatRack, SymForm
from tests.base import BaseTestCase

SAMPLES = 25
SEED = 42
TOL = 1e-9


def all_ok(checks):
    return all(check.ok for check in checks)


class TestConstructions(BaseTestCase):

    def test_polynomial(self):
        """ constant + c_1 t + c_2 t^2 """
        F = polynomial((2, -1), 1.0)
        self.assertAlmostEqual(F(0.0), 1.0)
        self.assertAlmostEqual(F(2.0), 1.0 + 4.0 - 4.0)

    def test_canonical_rack(self):
        """ exp(ad_x) passes every sampled axiom and returns the bracket """
        rack = ConstructionsMixin.canonical_rack(self.sl2)
        checks = ConstructionsMixin.check_float_rack(rack, SAMPLES, SEED, TOL)
        self.assertEqual([check.name for check in checks],
                         ['sampled_self_distributivity', 'sampled_pointedness',
                          'sampled_bijectivity', 'sampled_linearity'])
        self.assertTrue(all_ok(checks))
        self.assertTrue(ConstructionsMixin.check_extracted_bracket(rack, self.sl2).ok)

    def test_extracted_bracket_values(self):
        """ The derivative at zero is the structure tensor """
        rack = ConstructionsMixin.canonical_rack(self.so3)
        numpy.testing.assert_allclose(ConstructionsMixin.extracted_bracket(rack),
                                      structure_tensor(self.so3), atol=1e-6)

    def test_pr1_racks(self):
        """ exp(F(<x,x>) ad_x) is a rack for several F """
        cases = [(self.sl2, ())]
        for alg in (self.so3, self.heisenberg):
            cases.extend((alg, coefficients) for coefficients in ((), (1,), (1, Fraction(-1, 2), Fraction(1, 3))))
        for alg, coefficients in cases:
            rack = ConstructionsMixin.pr1_rack(alg, InvariantsMixin.build_P(alg, 1), coefficients)
            self.assertTrue(all_ok(ConstructionsMixin.check_float_rack(rack, SAMPLES, SEED, TOL)),
                            (alg, coefficients))
            self.assertTrue(ConstructionsMixin.check_extracted_bracket(rack, alg, 1).ok)

    def test_pr1_with_vanishing_constant(self):
        """ F(u) = u gives a rack whose bracket vanishes """
        rack = ConstructionsMixin.pr1_rack(self.sl2, InvariantsMixin.build_P(self.sl2, 1), (1,), constant=0)
        self.assertEqual(rack.params['constant'], 0.0)
        self.assertTrue(ConstructionsMixin.check_extracted_bracket(rack, self.sl2, 0).ok)
        self.assertFalse(ConstructionsMixin.check_extracted_bracket(rack, self.sl2, 1).ok)
        rack = ConstructionsMixin.pr1_rack(self.so3, InvariantsMixin.build_P(self.so3, 1), (1,), constant=0)
        self.assertTrue(all_ok(ConstructionsMixin.check_float_rack(rack, SAMPLES, SEED, TOL)))

    def test_pr1_rejects_bad_forms(self):
        """ P must be scalar and invariant """
        with self.assertRaises(NonInvariantFormException):
            ConstructionsMixin.pr1_rack(self.sl2, SymForm(2, 3, {(0, 0): 1}))
        with self.assertRaises(MalformedInputException):
            ConstructionsMixin.pr1_rack(self.sl2, SymForm(1, 3, {(0,): (1, 0, 0)}, True))

    def test_twist_by_norm(self):
        """ J(x) = <x,x> x commutes with exp(ad_x) """
        gram = numpy.array([[float(a) for a in row] for row in LeibnizMixin.gram_matrix(self.so3).entries])
        rack = ConstructionsMixin.canonical_rack(self.so3)
        twisted = ConstructionsMixin.twist_rack(rack, lambda x: (x @ gram @ x) * x, SAMPLES, SEED, TOL)
        self.assertTrue(twisted.label.startswith('twist'))
        self.assertLess(twisted.params['commutation_residual'], TOL)
        self.assertTrue(all_ok(ConstructionsMixin.check_float_rack(twisted, SAMPLES, SEED, TOL)))

    def test_twist_by_zero_is_trivial(self):
        """ J = 0 gives x |> y = y """
        rack = ConstructionsMixin.canonical_rack(self.sl2)
        twisted = ConstructionsMixin.twist_rack(rack, lambda x: 0 * x, SAMPLES, SEED, TOL)
        y = numpy.array([0.3, -0.2, 0.1])
        numpy.testing.assert_allclose(twisted(numpy.array([0.5, 0.5, 0.5]), y), y)

    def test_twist_rejects_non_commuting_map(self):
        """ A coordinate projection does not commute with exp(ad_x) """
        rack = ConstructionsMixin.canonical_rack(self.sl2)
        with self.assertRaises(CommutationException) as context:
            ConstructionsMixin.twist_rack(rack, lambda x: numpy.array([x[0], 0.0, 0.0]),
                                          SAMPLES, SEED, TOL)
        self.assertGreater(context.exception.residual, TOL)

    def test_pr22_on_nilpotent4(self):
        """ exp(ad_x)(y) + <y, e1> <x, e1>^2 e4 """
        e1 = (1, 0, 0, 0)
        e4 = (0, 0, 0, 1)
        rack = ConstructionsMixin.pr22_rack(self.nilpotent4, [(e1, e1)], [e4], [(0, 0, 1)])
        self.assertTrue(rack.params['flat_derivative'])
        self.assertTrue(all_ok(ConstructionsMixin.check_float_rack(rack, SAMPLES, SEED, TOL)))
        self.assertTrue(ConstructionsMixin.check_extracted_bracket(rack, self.nilpotent4, 1).ok)
        x = numpy.array([1.0, 0.0, 0.0, 0.0])
        numpy.testing.assert_allclose(rack(x, x), [1.0, 0.0, 0.0, 1.0])

    def test_pr22_with_linear_term(self):
        """ f(t) = t shifts the extracted bracket """
        e1 = (1, 0, 0, 0)
        e4 = (0, 0, 0, 1)
        rack = ConstructionsMixin.pr22_rack(self.nilpotent4, [(e1, e1)], [e4], [(0, 1)])
        self.assertFalse(rack.params['flat_derivative'])
        self.assertTrue(all_ok(ConstructionsMixin.check_float_rack(rack, SAMPLES, SEED, TOL)))
        self.assertFalse(ConstructionsMixin.check_extracted_bracket(rack, self.nilpotent4, 1).ok)

    def test_pr22_zero_function_is_canonical(self):
        """ f = 0 leaves exp(ad_x) """
        e1 = (1, 0, 0, 0)
        rack = ConstructionsMixin.pr22_rack(self.nilpotent4, [(e1, e1)], [(0, 0, 0, 1)], [(0,)])
        canonical = ConstructionsMixin.canonical_rack(self.nilpotent4)
        x = numpy.array([0.2, -0.4, 0.1, 0.3])
        y = numpy.array([0.5, 0.1, -0.3, 0.2])
        numpy.testing.assert_allclose(rack(x, y), canonical(x, y))

    def test_pr22_hypotheses(self):
        """ Vectors outside ([h,h] + Z)^perp, non-central z and f(0) != 0 are rejected """
        e1 = (1, 0, 0, 0)
        e3 = (0, 0, 1, 0)
        e4 = (0, 0, 0, 1)
        with self.assertRaises(HypothesisException):
            ConstructionsMixin.pr22_rack(self.nilpotent4, [(e3, e1)], [e4], [(0, 0, 1)])
        with self.assertRaises(HypothesisException):
            ConstructionsMixin.pr22_rack(self.nilpotent4, [(e1, e1)], [e1], [(0, 0, 1)])
        with self.assertRaises(HypothesisException):
            ConstructionsMixin.pr22_rack(self.nilpotent4, [(e1, e1)], [e4], [(1, 0, 1)])
        with self.assertRaises(HypothesisException):
            ConstructionsMixin.pr22_rack(self.sl2, [((1, 0, 0), (1, 0, 0))], [(1, 0, 0)], [(0, 0, 1)])
        with self.assertRaises(MalformedInputException):
            ConstructionsMixin.pr22_rack(self.nilpotent4, [(e1, e1)], [], [(0, 0, 1)])

    def test_pr22_subspace(self):
        """ ([h,h] + Z)^perp is span(e1, e2) on nilpotent4 and zero on sl2 """
        self.assertEqual(ConstructionsMixin.pr22_subspace(self.nilpotent4).dim, 2)
        self.assertEqual(ConstructionsMixin.pr22_subspace(self.sl2).dim, 0)

    def test_co_counterexample(self):
        """ The non-quandle deformation is certified and passes the sampled axioms """
        for alg, case in ((self.abelian3, 1), (self.abelian3, 2), (self.nilpotent4, 1),
                          (self.nilpotent4, 2), (self.heisenberg, 1)):
            result = ConstructionsMixin.co_counterexample(alg, case, SAMPLES, SEED, TOL)
            self.assertTrue(result.ok, (alg, case, result.details))
            self.assertEqual(result.name, 'co_counterexample[{}]'.format(case))
            self.assertTrue(result.details['certified'])
            self.assertTrue(any(c != 0 for c in result.details['certificate']))
            self.assertEqual(set(result.details['sampled']),
                             {'sampled_self_distributivity', 'sampled_pointedness',
                              'sampled_bijectivity', 'sampled_linearity'})

    def test_co_counterexample_hypotheses(self):
        """ sl2 has no center; on heisenberg the center lies in [h,h] """
        with self.assertRaises(HypothesisException):
            ConstructionsMixin.co_counterexample(self.sl2, 1, SAMPLES, SEED, TOL)
        with self.assertRaises(HypothesisException):
            ConstructionsMixin.co_counterexample(self.heisenberg, 2, SAMPLES, SEED, TOL)
        with self.assertRaises(MalformedInputException):
            ConstructionsMixin.co_counterexample(self.abelian3, 3, SAMPLES, SEED, TOL)

    def test_check_float_rack_detects_failures(self):
        """ x |> y = x + y is not pointed, linear or self-distributive """
        rack = FloatRack(3, lambda x, y: x + y, 'shift')
        checks = {check.name: check for check in
                  ConstructionsMixin.check_float_rack(rack, SAMPLES, SEED, TOL)}
        self.assertFalse(checks['sampled_self_distributivity'].ok)
        self.assertFalse(checks['sampled_pointedness'].ok)
        self.assertFalse(checks['sampled_linearity'].ok)

    def test_sampling_is_seeded(self):
        """ The same seed gives the same residuals """
        rack = ConstructionsMixin.pr1_rack(self.so3, InvariantsMixin.build_P(self.so3, 1), (1,))
        first = ConstructionsMixin.check_float_rack(rack, SAMPLES, 7, TOL)
        second = ConstructionsMixin.check_float_rack(rack, SAMPLES, 7, TOL)
        self.assertEqual([check.details for check in first], [check.details for check in second])

    def test_truncation(self):
        """ The truncated exact series stays within the tail bound of the float rack """
        P = InvariantsMixin.build_P(self.sl2, 1)
        a = (1, Fraction(-1, 2))
        points = [((Fraction(1, 4), Fraction(1, 8), Fraction(-1, 8)), (Fraction(1, 2), 0, Fraction(1, 4))),
                  ((0, Fraction(1, 4), Fraction(1, 4)), (1, 1, 0))]
        result = ConstructionsMixin.check_truncation(self.sl2, P, a, 8, points)
        self.assertTrue(result.ok, result.details)
        self.assertEqual(result.details['order'], 8)

    def test_tail_bound_decreases(self):
        """ Higher orders leave a smaller tail """
        P = InvariantsMixin.build_P(self.sl2, 1)
        x = (Fraction(1, 4), Fraction(1, 8), Fraction(-1, 8))
        low = ConstructionsMixin.truncation_tail_bound(self.sl2, P, (1,), 4, x)
        high = ConstructionsMixin.truncation_tail_bound(self.sl2, P, (1,), 8, x)
        self.assertGreater(low, high)
        self.assertGreaterEqual(high, 0.0)


if __name__ == '__main__':
    unittest.main()
