"""
Tests for the acceptance suite registry
"""

from unittest.mock import patch

from django.test import SimpleTestCase

from core import verification
from core.exceptions import ComputationError, SolverError
from core.verification import Measurement


def passing_suite(seed):
    return Measurement(1e-12, 1e-10, details={'seed': seed})


def failing_suite(seed):
    raise SolverError('no sign change')


class RegistryTests(SimpleTestCase):
    """ Test suite discovery and name resolution """

    def test_every_suite_is_registered(self):
        self.assertEqual(
            verification.available_suites(), list(verification.SUITE_ORDER)
        )

    def test_all_keeps_the_documented_order(self):
        self.assertEqual(
            verification.resolve(['rate', 'all']),
            list(verification.SUITE_ORDER),
        )

    def test_duplicates_collapse(self):
        self.assertEqual(
            verification.resolve(['chain', 'f0', 'chain']), ['chain', 'f0']
        )

    def test_unknown_suite(self):
        with self.assertRaises(ComputationError) as context:
            verification.resolve(['chromatic', 'nope'])

        self.assertIn('nope', str(context.exception))


class MeasurementTests(SimpleTestCase):
    """ Test measurements judge themselves """

    def test_within_tolerance(self):
        self.assertTrue(Measurement(1e-9, 1e-8).passed)

    def test_outside_tolerance(self):
        self.assertFalse(Measurement(1e-7, 1e-8).passed)

    def test_explicit_verdict(self):
        self.assertFalse(Measurement(0.0, 1.0, passed=False).passed)


@patch.dict(verification._registry, {
    'chromatic': passing_suite,
    'chain': failing_suite,
})
class RunSuiteTests(SimpleTestCase):
    """ Test running suites and capturing their errors """

    def test_passing_suite(self):
        result = verification.run_suite('chromatic', 5)

        self.assertTrue(result.passed)
        self.assertEqual(result.seed, 5)
        self.assertEqual(result.details, {'seed': 5})
        self.assertIsNone(result.error)

    def test_failing_suite_is_recorded(self):
        with self.assertLogs('core.verification', level='WARNING'):
            result = verification.run_suite('chain', 5)

        self.assertFalse(result.passed)
        self.assertIsNone(result.measured)
        self.assertEqual(result.error, 'SolverError: no sign change')

    def test_run_suites(self):
        with self.assertLogs('core.verification', level='WARNING'):
            results = verification.run_suites(['chain', 'chromatic'], 1)

        self.assertEqual(
            [r.to_json()['suite'] for r in results], ['chain', 'chromatic']
        )
