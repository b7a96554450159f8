"""
Tests for moments, free cumulants and the resolvent
"""

import math
from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import (
    BranchError,
    DomainError,
    EdgeError,
    SizeLimitError,
    SolverError,
)
from freeprob import transforms
from freeprob.transforms import MomentSequence
from scaling.grid import GridFunction


class MomentTests(SimpleTestCase):
    """ Test b from a and its power moments """

    def test_b_from_constant_a(self):
        b = transforms.b_from_a(GridFunction.constant(1.0, 32))

        np.testing.assert_allclose(b.values, b.x - 1.0, atol=1e-15)

    def test_moments_of_uniform_b(self):
        b = GridFunction.from_callable(lambda x: x - 1.0, 512)

        m = transforms.moments_of_b(b, 3)

        self.assertAlmostEqual(m[0], 1.0)
        self.assertAlmostEqual(m[1], -0.5)
        self.assertAlmostEqual(m[2], 1 / 3, places=5)
        self.assertAlmostEqual(m[3], -0.25, places=5)

    def test_moment_cap(self):
        with self.assertRaises(SizeLimitError):
            transforms.moments_of_b(GridFunction.constant(0.0, 16), 13)


class FreeCumulantTests(SimpleTestCase):
    """ Test the moment to free cumulant inversion """

    def test_constant(self):
        m = MomentSequence(tuple(0.5 ** p for p in range(1, 5)))

        cumulants = transforms.free_cumulants_from_moments(m, 4)

        np.testing.assert_allclose(cumulants, [0.5, 0.0, 0.0, 0.0], atol=1e-15)

    def test_semicircle(self):
        m = MomentSequence((0.0, 1.0, 0.0, 2.0, 0.0, 5.0))

        cumulants = transforms.free_cumulants_from_moments(m, 6)

        np.testing.assert_allclose(cumulants, [0, 1, 0, 0, 0, 0], atol=1e-12)

    def test_centred_uniform(self):
        m = MomentSequence((0.0, 1 / 12, 0.0, 1 / 80))

        cumulants = transforms.free_cumulants_from_moments(m, 4)

        self.assertAlmostEqual(cumulants[1], 1 / 12)
        self.assertAlmostEqual(cumulants[3], -1 / 720)

    def test_vz_series(self):
        m = MomentSequence((0.0, 1.0))

        self.assertEqual(transforms.vz_series(m, 2), [1.0, 0.0, 1.0])

    def test_too_few_moments(self):
        with self.assertRaises(DomainError):
            transforms.free_cumulants_from_moments(MomentSequence((1.0,)), 2)


class ResolventTests(SimpleTestCase):
    """ Test G(z) and its inverse """

    def setUp(self):
        self.b = GridFunction.from_callable(lambda x: x - 1.0, 256)

    def test_resolvent_of_uniform_b(self):
        self.assertAlmostEqual(
            transforms.resolvent(self.b, 1.0), math.log(2.0), places=5
        )

    def test_branch(self):
        with self.assertRaises(BranchError):
            transforms.resolvent(self.b, 0.0)

    def test_solve_z(self):
        """ Test log((z+1)/z) = v inverts to z = 1/(e^v - 1) """
        z = transforms.solve_z(self.b, 1.0)

        self.assertAlmostEqual(z, 1 / math.expm1(1.0), places=4)

    def test_solve_z_for_constant_b(self):
        self.assertEqual(
            transforms.solve_z(GridFunction.constant(0.0, 16), 0.5), 2.0
        )

    def test_r_transform_inverts_resolvent(self):
        c = 0.25
        b = GridFunction.constant(c, 16)
        m = transforms.moments_of_b(b, 3)
        w = transforms.resolvent(b, 2.0)

        self.assertAlmostEqual(
            transforms.r_transform(
                transforms.free_cumulants_from_moments(m, 3), w
            ),
            2.0,
        )

    def test_resolvent_of_constant_b(self):
        self.assertAlmostEqual(
            transforms.resolvent(GridFunction.constant(0.0, 16), 2.0), 0.5
        )

    def test_solve_z_inside_bracket(self):
        """ Test the bracketed root, away from the closed-form shortcut """
        v = 2.0
        z = transforms.solve_z(self.b, v)

        self.assertGreater(z, 0.0)
        self.assertAlmostEqual(transforms.resolvent(self.b, z), v, places=8)

    @patch('freeprob.transforms.brentq')
    def test_bracketing_failure_is_a_solver_error(self, patched_brentq):
        patched_brentq.side_effect = ValueError('f(a) and f(b) same sign')

        with self.assertRaises(SolverError):
            transforms.solve_z(self.b, 1.0)

    def test_non_positive_v(self):
        with self.assertRaises(DomainError):
            transforms.solve_z(self.b, 0.0)

    def test_edge(self):
        with self.assertRaises(EdgeError):
            transforms.solve_z(self.b, 1e20)
