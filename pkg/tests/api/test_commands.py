import unittest
import json
import os
import shutil
import tempfile
from tests.base import BaseTestCase
from src.handlers.CommandsHandler import EXIT_FAILED, EXIT_MALFORMED, EXIT_OK
from src.mixins.LeibnizMixin import LeibnizMixin
from src.services.serialization import algebra_to_json


class TestCommands(BaseTestCase):
    def setUp(self):
        super(TestCommands, self).setUp()
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def invoke(self, *args):
        result = self.runner.invoke(args=list(args))
        return result, json.loads(result.stdout)

    def test_check_leibniz(self):
        """ Test check-leibniz exits 0 on sl2"""
        result, report = self.invoke('check-leibniz', '--algebra', 'builtin:sl2')
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertTrue(report['ok'])
        self.assertEqual(report['checks'][0]['name'], 'left_leibniz')

    def test_cohomology(self):
        """ Test cohomology reports dim H0 of abelian:3"""
        result, report = self.invoke('cohomology', '--algebra', 'abelian:3')
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(report['data']['h0'], 3)

    def test_malformed_algebra(self):
        """ Test an unknown algebra exits 2"""
        result, report = self.invoke('check-leibniz', '--algebra', 'builtin:g2')
        self.assertEqual(result.exit_code, EXIT_MALFORMED)
        self.assertEqual(report['status'], 'fail')
        self.assertEqual(report['error']['error'], 'UnknownAlgebraException')

    def test_missing_file(self):
        """ Test an algebra file that does not exist exits 2"""
        path = os.path.join(self.directory, 'missing.json')
        result, _ = self.invoke('check-leibniz', '--algebra', '@' + path)
        self.assertEqual(result.exit_code, EXIT_MALFORMED)

    def test_failing_algebra_file(self):
        """ Test a perturbed sl2 read from a file exits 1"""
        path = os.path.join(self.directory, 'perturbed.json')
        with open(path, 'w') as handle:
            json.dump(algebra_to_json(LeibnizMixin.perturbed(self.sl2, 1, 2, 1)), handle)
        result, report = self.invoke('check-leibniz', '--algebra', '@' + path)
        self.assertEqual(result.exit_code, EXIT_FAILED)
        self.assertFalse(report['ok'])
        violations = report['checks'][0]['details']['violations']
        self.assertTrue(violations)
        self.assertEqual(sorted(violations[0]), ['residual', 'triple'])

    def test_json_out(self):
        """ Test --json-out writes the printed report"""
        path = os.path.join(self.directory, 'report.json')
        result, report = self.invoke('invariants', '--algebra', 'sl2', '--json-out', path)
        self.assertEqual(result.exit_code, EXIT_OK)
        with open(path) as handle:
            self.assertEqual(json.load(handle), report)
        self.assertEqual([entry['dim'] for entry in report['data']['arities']], [0, 1, 0, 1])

    def test_reports_are_deterministic(self):
        """ Test two runs with the same seed print the same report"""
        args = ('constructions', '--algebra', 'so3', '--a', '1', '--samples', '10', '--seed', '3')
        first, _ = self.invoke(*args)
        second, _ = self.invoke(*args)
        self.assertEqual(first.stdout, second.stdout)

    def test_reconstruct(self):
        """ Test reconstruct recovers B_3 of F(u) = 1 + u on so3"""
        result, report = self.invoke('reconstruct', '--algebra', 'so3', '--a', '1', '--order', '4')
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(sorted(report['data']['B']), ['2', '3', '4'])
        self.assertTrue(report['data']['B']['3']['entries'])
        self.assertEqual([entry['status'] for entry in report['data']['degrees']], ['ok'] * 3)

    def test_check_rack_from_series_file(self):
        """ Test check-rack on a series written by canonical"""
        path = os.path.join(self.directory, 'series.json')
        _, report = self.invoke('canonical', '--algebra', 'sl2', '--order', '3')
        with open(path, 'w') as handle:
            json.dump(report['data']['series'], handle)
        result, report = self.invoke('check-rack', '--series', '@' + path)
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(report['data']['order'], 3)

    def test_reduced_selftest(self):
        """ Test the reduced acceptance suite exits 0"""
        result, report = self.invoke('selftest', '--reduced', '--samples', '5')
        self.assertEqual(result.exit_code, EXIT_OK, report)
        self.assertTrue(report['data']['reduced'])

    def test_bad_tolerance_exits_2(self):
        """ Test a zero tolerance is malformed instead of falling back"""
        result, report = self.invoke('constructions', '--algebra', 'so3', '--tol', '0')
        self.assertEqual(result.exit_code, EXIT_MALFORMED)
        self.assertEqual(report['error']['error'], 'MalformedInputException')

    @unittest.skipUnless(os.environ.get('RACK_SELFTEST'), "set RACK_SELFTEST to run the full suite")
    def test_selftest(self):
        """ Test the acceptance suite"""
        result, report = self.invoke('selftest')
        self.assertEqual(result.exit_code, EXIT_OK, report)


if __name__ == '__main__':
    unittest.main()
