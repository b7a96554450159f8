"""
Tests for the SSEP free energy, rate function and the classical solver
"""

import math
from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import IterationLimitError
from scaling.functionals import KernelFreeEnergy
from scaling.grid import GridFunction
from scaling.solver import legendre_transform
from ssep.classical import classical_F_ssep
from ssep.equivalence import (
    EquivalenceEntry,
    bridging_residuals,
    equivalence_report,
)
from ssep.free_energy import (
    F0_ssep,
    F_ssep_free,
    FieldResponse,
    SsepFreeEnergy,
    density_profile,
    rate_function_ssep,
    steady_profile,
)
from ssep.kernels import ssep_kernel_set


class FreeEnergyFunctionalTests(SimpleTestCase):
    """ Test the closed form of F0 """

    def test_zero_source(self):
        q = GridFunction.constant(0.0, 32)
        functional = SsepFreeEnergy()

        self.assertEqual(functional.value(q), 0.0)
        self.assertEqual(functional.auxiliary(q), 1.0)
        np.testing.assert_allclose(functional.gradient(q).values, q.x)

    def test_small_source(self):
        """ Test F0(a) = a/2 - a^2/24 + O(a^4) for constant a """
        a = 0.01

        value = F0_ssep(GridFunction.constant(a, 256))

        self.assertAlmostEqual(value, a / 2 - a ** 2 / 24, places=8)

    def test_series_matches_closed_form(self):
        q = GridFunction.constant(0.2, 256)

        series = KernelFreeEnergy(ssep_kernel_set(4), 4).value(q)

        self.assertAlmostEqual(series, F0_ssep(q), delta=1e-5)


class VariationalTests(SimpleTestCase):
    """ Test F[h] and the density profiles it predicts """

    def test_zero_field(self):
        h = GridFunction.constant(0.0, 64)

        solution = F_ssep_free(h)

        self.assertAlmostEqual(solution.F_value, 0.0, places=10)
        np.testing.assert_allclose(solution.g.values, h.x, atol=1e-8)
        np.testing.assert_allclose(
            density_profile(solution, h).values,
            steady_profile(64).values,
            atol=1e-8,
        )

    def test_bridging_identities(self):
        solution = F_ssep_free(GridFunction.constant(0.5, 512))

        slope_residual, integral_residual = bridging_residuals(solution)

        self.assertLess(slope_residual, 1e-6)
        self.assertLess(integral_residual, 1e-5)

    def test_classical_zero_field(self):
        solution = classical_F_ssep(GridFunction.constant(0.0, 64))

        self.assertAlmostEqual(solution.slope, 1.0, places=8)
        self.assertAlmostEqual(solution.F_value, 0.0, places=8)
        self.assertLess(solution.ode_residual(intervals=1024), 1e-8)

    def test_free_and_classical_agree(self):
        h = GridFunction.from_callable(lambda x: 0.5 * x, 512)

        free = F_ssep_free(h).F_value
        classical = classical_F_ssep(h).F_value

        self.assertAlmostEqual(free, classical, delta=1e-4)

    def test_equivalence_report_records_failures(self):
        h = GridFunction.constant(0.0, 64)

        report = equivalence_report(
            [('0', h)], tolerance=1e-4, identity_tolerance=1e-6
        )

        self.assertEqual(len(report.entries), 1)
        self.assertIsNone(report.entries[0].error)
        self.assertTrue(report.passed)


class RateFunctionTests(SimpleTestCase):
    """ Test the SSEP rate function """

    def test_steady_profile_has_zero_rate(self):
        solution = rate_function_ssep(steady_profile(128))

        self.assertAlmostEqual(solution.F_value, 0.0, places=8)
        self.assertAlmostEqual(solution.z, 1.0, places=8)

    def test_other_profiles_cost(self):
        n = GridFunction.from_callable(
            lambda x: x + 0.05 * np.sin(np.pi * x), 128
        )

        self.assertGreater(rate_function_ssep(n).F_value, 0.0)

    def test_flat_profile(self):
        """ Test I[1/2] = log(pi/2), reached by g = sin^2(pi x / 2) """
        n = GridFunction.constant(0.5, 256)

        solution = rate_function_ssep(n)

        self.assertAlmostEqual(
            solution.F_value, math.log(math.pi / 2), delta=1e-2
        )
        self.assertLess(solution.residual, 1e-10)
        self.assertTrue(np.all(np.diff(solution.g.values) > 0))
        np.testing.assert_allclose(
            solution.g.values, np.sin(np.pi * n.x / 2) ** 2, atol=1e-2
        )

    def test_flat_profile_bounds_its_legendre_transform(self):
        n = GridFunction.constant(0.5, 128)
        response = FieldResponse()

        transform = legendre_transform(
            response, n, density=response.density, knots=3, starts=1,
            bound=1.0,
        )

        self.assertGreater(transform, 0.0)
        self.assertLess(transform, rate_function_ssep(n).F_value)

    def test_duality_with_the_free_energy(self):
        """ Test F[h] + I[n_h] = ∫ h n_h at the most likely profile """
        fields = {
            '0.8': GridFunction.constant(0.8, 256),
            '-0.5': GridFunction.constant(-0.5, 256),
            'x-0.5': GridFunction.from_callable(lambda x: x - 0.5, 256),
        }
        for label, h in fields.items():
            with self.subTest(field=label):
                solution = F_ssep_free(h)
                n = density_profile(solution, h)

                rate = rate_function_ssep(n).F_value

                self.assertGreater(rate, 0.0)
                self.assertAlmostEqual(
                    solution.F_value + rate, (h * n).integral(), delta=1e-4
                )

    def test_legendre_transform_of_free_energy(self):
        h = GridFunction.from_callable(lambda x: 0.5 * np.sin(np.pi * x), 128)
        response = FieldResponse()
        n = response.density(h)

        transform = legendre_transform(
            response, n, density=response.density, starts=1
        )

        self.assertAlmostEqual(
            transform, rate_function_ssep(n).F_value, delta=1e-4
        )

    def test_field_response_solves_once_per_field(self):
        h = GridFunction.constant(0.3, 32)
        response = FieldResponse()

        with patch(
            'ssep.free_energy.F_ssep_free', wraps=F_ssep_free
        ) as patched_solve:
            value = response(h)
            density = response.density(h)

        patched_solve.assert_called_once()
        self.assertAlmostEqual(value, F_ssep_free(h).F_value)
        self.assertEqual(len(density), 33)

    def test_solver_options(self):
        n = GridFunction.constant(0.5, 64)

        with self.assertRaises(IterationLimitError):
            rate_function_ssep(n, tolerance=1e-10, max_iterations=1)


class EquivalenceReportTests(SimpleTestCase):
    """ Test the bookkeeping of the equivalence report """

    def test_relative_difference(self):
        entry = EquivalenceEntry('h', F_free=0.0101, F_classical=0.01)

        self.assertAlmostEqual(entry.relative_difference, 0.01)

    def test_vanishing_free_energy(self):
        entry = EquivalenceEntry('0', F_free=1e-13, F_classical=0.0)

        self.assertEqual(entry.relative_difference, 1e-13)

    @patch('ssep.equivalence.classical_F_ssep')
    def test_numerical_failure_is_recorded(self, patched_classical):
        patched_classical.side_effect = ValueError(
            'f(a) and f(b) must have different signs'
        )
        h = GridFunction.constant(0.0, 32)

        report = equivalence_report([('0', h), ('0 again', h)])

        self.assertEqual(len(report.entries), 2)
        for entry in report.entries:
            self.assertTrue(entry.error.startswith('SolverError'))
            self.assertIsNotNone(entry.F_free)
        self.assertFalse(report.passed)
