import unittest
import json
from mock import patch
from tests.base import BaseTestCase
from src.mixins.LeibnizMixin import LeibnizMixin
from src.services.serialization import algebra_to_json


class TestChecks(BaseTestCase):
    def post_suite(self, suite, body):
        return self.client.post(
            '/checks/{}'.format(suite),
            data=json.dumps(body),
            content_type='application/json'
        )

    def test_check_leibniz_sl2(self):
        """ Test the Leibniz check on sl2"""
        with self.client:
            response = self.post_suite('check-leibniz', dict(algebra='builtin:sl2'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['status'], 'success')
            self.assertEqual(data['message'], 'checks_passed')
            self.assertEqual(data['report']['suite'], 'check-leibniz')
            self.assertEqual(data['report']['algebra'], 'builtin:sl2')
            self.assertTrue(data['report']['ok'])
            self.assertEqual(response.content_type, 'application/json')
            self.assertEqual(response.status_code, 200)

    def test_unknown_suite(self):
        """ Test a suite that does not exist"""
        with self.client:
            response = self.post_suite('everything', dict(algebra='sl2'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['status'], 'fail')
            self.assertEqual(data['message'], 'suite_not_found')
            self.assertEqual(response.status_code, 404)

    def test_cohomology_of_abelian(self):
        """ Test the cohomology suite on abelian:3"""
        with self.client:
            response = self.post_suite('cohomology', dict(algebra='abelian:3'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['report']['data']['h0'], 3)
            self.assertEqual(data['report']['data']['h1'], 9)
            self.assertEqual(response.status_code, 200)

    def test_canonical_with_order(self):
        """ Test the canonical series of so3 at order 4"""
        with self.client:
            response = self.post_suite('canonical', dict(algebra='so3', order=4))
            data = json.loads(response.data.decode())
            self.assertEqual(data['message'], 'checks_passed')
            self.assertEqual(data['report']['data']['series']['N'], 4)
            names = [check['name'] for check in data['report']['checks']]
            self.assertIn('quandle', names)
            self.assertIn('closed_form', names)
            self.assertEqual(response.status_code, 200)

    def test_order_must_be_an_integer(self):
        """ Test a malformed order"""
        with self.client:
            response = self.post_suite('canonical', dict(algebra='sl2', order='six'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['status'], 'fail')
            self.assertEqual(data['message'], 'malformed_input')
            self.assertEqual(response.status_code, 400)

    @patch('src.config.RACK_ORDER', None)
    def test_missing_order(self):
        """ Test the canonical suite without order and without RACK_ORDER"""
        with self.client:
            response = self.post_suite('canonical', dict(algebra='sl2'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['message'], 'malformed_input')
            self.assertEqual(response.status_code, 400)

    def test_unknown_algebra(self):
        """ Test a suite on an unknown algebra"""
        with self.client:
            response = self.post_suite('check-leibniz', dict(algebra='g2'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['message'], 'malformed_input')
            self.assertEqual(response.status_code, 400)

    def test_perturbed_algebra_fails(self):
        """ Test a perturbed sl2 given inline"""
        document = algebra_to_json(LeibnizMixin.perturbed(self.sl2, 1, 2, 1))
        with self.client:
            response = self.post_suite('check-leibniz', dict(algebra=document))
            data = json.loads(response.data.decode())
            self.assertEqual(data['status'], 'fail')
            self.assertEqual(data['message'], 'checks_failed')
            self.assertFalse(data['report']['ok'])
            self.assertIsNone(data['report']['algebra'])
            self.assertTrue(data['report']['checks'][0]['details']['violations'])
            self.assertEqual(response.status_code, 422)

    def test_rigidity_with_coefficients(self):
        """ Test the rigidity round trip of F(u) = 1 + u - u^2 / 2"""
        with self.client:
            response = self.post_suite('rigidity', dict(algebra='so3', a=[1, '-1/2'], order=6))
            data = json.loads(response.data.decode())
            self.assertEqual(data['message'], 'checks_passed')
            self.assertEqual(data['report']['data']['a'], ['1', '-1/2'])
            self.assertEqual(response.status_code, 200)

    def test_timings_are_optional(self):
        """ Test timings appear only when asked for"""
        with self.client:
            response = self.post_suite('cohomology', dict(algebra='sl2', timings=True))
            data = json.loads(response.data.decode())
            self.assertIn('cohomology', data['report']['timings'])
            response = self.post_suite('cohomology', dict(algebra='sl2'))
            data = json.loads(response.data.decode())
            self.assertNotIn('timings', data['report'])

    @patch('src.handlers.ChecksHandler.run_suite', side_effect=Exception('boom'))
    def test_internal_error(self, mock_run_suite):
        """ Test an unexpected failure"""
        with self.client:
            response = self.post_suite('check-leibniz', dict(algebra='sl2'))
            data = json.loads(response.data.decode())
            self.assertEqual(data['message'], 'internal_error')
            self.assertEqual(response.status_code, 500)


if __name__ == '__main__':
    unittest.main()
