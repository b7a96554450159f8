"""
Tests for the variational and rate-function solvers
"""

import math

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DomainError, IterationLimitError
from scaling import solver
from scaling.functionals import IndependentFreeEnergy
from scaling.grid import GridFunction


def kl(n, g):
    return n * math.log(n / g) + (1 - n) * math.log((1 - n) / (1 - g))


class VariationalSolverTests(SimpleTestCase):
    """ Test solve_variational on independent sites """

    def setUp(self):
        self.e = GridFunction.constant(0.5, 64)
        self.F0 = IndependentFreeEnergy(0.3)

    def test_independent_sites(self):
        """ Test F = log(1 + e g0) with q = e / (1 + e g0) """
        solution = solver.solve_variational(self.e, self.F0)

        self.assertAlmostEqual(solution.F_value, math.log(1.15), places=9)
        np.testing.assert_allclose(solution.q.values, 0.5 / 1.15)
        self.assertLess(solution.residual, 1e-10)
        self.assertIsNone(solution.z)

    def test_history_decreases(self):
        solution = solver.solve_variational(self.e, self.F0, damping=0.5)

        history = solution.residual_history
        self.assertEqual(len(history), solution.iterations)
        self.assertTrue(all(a >= b for a, b in zip(history, history[1:])))

    def test_json(self):
        data = solver.solve_variational(self.e, self.F0).to_json()

        self.assertEqual(len(data['x']), 65)
        self.assertNotIn('z', data)

    def test_iteration_limit(self):
        with self.assertRaises(IterationLimitError):
            solver.solve_variational(self.e, self.F0, max_iterations=1)

    def test_non_positive_denominator(self):
        with self.assertRaises(DomainError):
            solver.solve_variational(
                GridFunction.constant(-2.0, 16), IndependentFreeEnergy(0.6)
            )

    def test_block_solver(self):
        solution = solver.solve_block_variational(self.e, self.F0, blocks=8)

        self.assertAlmostEqual(solution.F_value, math.log(1.15), places=9)

    def test_blocks_must_divide_grid(self):
        with self.assertRaises(DomainError):
            solver.solve_block_variational(self.e, self.F0, blocks=7)


class RateFunctionTests(SimpleTestCase):
    """ Test the rate function of independent sites """

    def test_relative_entropy(self):
        n = GridFunction.constant(0.4, 64)

        solution = solver.solve_rate_function(n, IndependentFreeEnergy(0.3))

        self.assertAlmostEqual(solution.F_value, kl(0.4, 0.3), places=9)

    def test_vanishes_at_typical_profile(self):
        n = GridFunction.constant(0.3, 64)

        solution = solver.solve_rate_function(n, IndependentFreeEnergy(0.3))

        self.assertAlmostEqual(solution.F_value, 0.0, places=10)

    def test_profile_outside_unit_interval(self):
        n = GridFunction.from_callable(lambda x: 1.5 * x, 32)

        with self.assertRaises(DomainError):
            solver.solve_rate_function(n, IndependentFreeEnergy(0.3))

    def test_rounding_past_the_ends_is_clipped(self):
        values = np.linspace(0.0, 1.0, 33)
        values[0], values[-1] = -1e-13, 1.0 + 1e-12

        n = solver.check_rate_profile(GridFunction(values))

        self.assertEqual(n.values[0], 0.0)
        self.assertEqual(n.values[-1], 1.0)
        np.testing.assert_array_equal(n.values[1:-1], values[1:-1])

    def test_interior_node_on_the_boundary(self):
        values = np.linspace(0.0, 1.0, 33)
        values[16] = 0.0

        with self.assertRaises(DomainError):
            solver.check_rate_profile(GridFunction(values))

    def test_rate_integrand_edges(self):
        """ Test end nodes are extrapolated where the logs are singular """
        n = np.linspace(0.0, 1.0, 5)
        g = np.full(5, 0.5)

        values = solver.rate_integrand(n, g, np.zeros(5))

        self.assertTrue(np.all(np.isfinite(values)))


class LegendreTransformTests(SimpleTestCase):
    """ Test the numerical Legendre transform """

    def test_independent_sites(self):
        """ Test the transform of independent sites is the relative entropy """
        g = 0.3
        n = GridFunction.constant(0.4, 64)

        def F(h):
            return h.apply(lambda v: np.log1p(g * np.expm1(v))).integral()

        value = solver.legendre_transform(F, n, knots=3, starts=2, seed=1)

        self.assertAlmostEqual(value, kl(0.4, g), places=6)

    def test_every_node_with_density(self):
        """ Test the node-wise transform is the trapezoid sum of KL """
        g = 0.3
        n = GridFunction.from_callable(lambda x: 0.2 + 0.5 * x, 16)

        def F(h):
            return h.apply(lambda v: np.log1p(g * np.expm1(v))).integral()

        def density(h):
            return h.apply(lambda v: g * np.exp(v) / (1 + g * np.expm1(v)))

        value = solver.legendre_transform(F, n, density=density, starts=1)

        expected = n.apply(
            lambda v: v * np.log(v / g) + (1 - v) * np.log((1 - v) / (1 - g))
        ).integral()
        self.assertAlmostEqual(value, expected, places=8)

    def test_knots_with_density(self):
        g = 0.3
        n = GridFunction.constant(0.4, 32)

        def F(h):
            return h.apply(lambda v: np.log1p(g * np.expm1(v))).integral()

        def density(h):
            return h.apply(lambda v: g * np.exp(v) / (1 + g * np.expm1(v)))

        value = solver.legendre_transform(
            F, n, density=density, knots=3, starts=1
        )

        self.assertAlmostEqual(value, kl(0.4, g), places=8)


class InitialisationProbeTests(SimpleTestCase):
    """ Test re-solving from perturbed starting points """

    def test_unique_fixed_point(self):
        e = GridFunction.constant(0.5, 64)

        solution = solver.probe_initialisation(
            e, IndependentFreeEnergy(0.3), starts=3, seed=2
        )

        self.assertLess(solution.spread, 1e-9)
        self.assertAlmostEqual(solution.F_value, math.log(1.15), places=9)
        self.assertIn('spread', solution.to_json())

    def test_spread_is_logged(self):
        e = GridFunction.constant(0.5, 64)

        with self.assertLogs('scaling.solver', level='WARNING'):
            solver.probe_initialisation(
                e, IndependentFreeEnergy(0.3), starts=2, seed=2,
                spread_tolerance=-1.0,
            )
