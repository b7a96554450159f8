"""
Tests for correlated Bernoulli models
"""

import math

import numpy as np
from django.test import SimpleTestCase

from bernoulli import model as bernoulli_model
from bernoulli.model import BernoulliModel
from core.exceptions import DomainError, ModelError, SizeLimitError
from cumulants.conversions import moments_to_cumulants
from cumulants.tables import MomentTable


class BernoulliModelTests(SimpleTestCase):
    """ Test construction and subset moments """

    def test_weights_must_be_normalised(self):
        with self.assertRaises(ModelError):
            BernoulliModel(1, [0.5, 0.6])

    def test_negative_weight_rejected(self):
        with self.assertRaises(ModelError):
            BernoulliModel(1, [1.5, -0.5])

    def test_wrong_shape_rejected(self):
        with self.assertRaises(ModelError):
            BernoulliModel(2, [0.5, 0.5])

    def test_site_cap(self):
        with self.assertRaises(SizeLimitError):
            BernoulliModel(bernoulli_model.SITE_LIMIT + 1, [1.0])

    def test_from_bitstrings(self):
        """ Test position i-1 of the bit string is site i """
        m = BernoulliModel.from_bitstrings(2, {'10': 0.25, '11': 0.75})

        self.assertAlmostEqual(m.subset_moment([1]), 1.0)
        self.assertAlmostEqual(m.subset_moment([2]), 0.75)
        self.assertEqual(BernoulliModel.from_json(m.to_json()).N, 2)

    def test_bad_bitstring(self):
        with self.assertRaises(ModelError):
            BernoulliModel.from_bitstrings(2, {'1x': 1.0})

    def test_independent_moments(self):
        g = [0.2, 0.5, 0.7]
        m = BernoulliModel.independent(g)

        self.assertAlmostEqual(m.subset_moment([1, 3]), 0.14)
        np.testing.assert_allclose(m.means(), g)

    def test_site_outside_range(self):
        m = BernoulliModel.independent([0.5])

        with self.assertRaises(DomainError):
            m.subset_moment([2])


class CumulantTests(SimpleTestCase):
    """ Test non-coincident and reconstructed cumulants """

    def test_independent_sites_have_no_joint_cumulants(self):
        table = bernoulli_model.noncoincident_cumulants(
            BernoulliModel.independent([0.2, 0.5, 0.7])
        )

        self.assertAlmostEqual(table[1, 2], 0.0)
        self.assertAlmostEqual(table[1, 2, 3], 0.0)
        self.assertAlmostEqual(table[2], 0.5)

    def test_single_site_reconstruction(self):
        """ Test K(b,b) = g(1-g) and K(b,b,b) = g(1-g)(1-2g) """
        g = 0.3
        table = bernoulli_model.noncoincident_cumulants(
            BernoulliModel.independent([g])
        )

        self.assertAlmostEqual(
            bernoulli_model.reconstruct_coincident_cumulant(table, (1, 1)),
            g * (1 - g),
        )
        self.assertAlmostEqual(
            bernoulli_model.reconstruct_coincident_cumulant(
                table, (1, 1, 1)
            ),
            g * (1 - g) * (1 - 2 * g),
        )

    def test_reconstruction_matches_direct_cumulants(self):
        """ Test b_i^2 = b_i inversion against moment inversion """
        rng = np.random.default_rng(2)
        m = BernoulliModel.random(3, rng)
        table = bernoulli_model.noncoincident_cumulants(m)
        moments = MomentTable.from_function(
            3, lambda key: m.subset_moment(set(key))
        )
        for indices in [(1, 1, 2), (1, 2, 2, 3), (3, 1, 3, 1)]:
            self.assertAlmostEqual(
                bernoulli_model.reconstruct_coincident_cumulant(
                    table, indices
                ),
                moments_to_cumulants(moments, indices),
                places=12,
            )

    def test_coincidence_partition(self):
        p = bernoulli_model.coincidence_partition((2, 1, 2))

        self.assertEqual(p.to_json(), [[1, 3], [2]])


class LogPartitionTests(SimpleTestCase):
    """ Test the exact log partition function """

    def test_independent_sites(self):
        g = np.array([0.2, 0.6])
        h = np.array([0.3, -1.2])
        m = BernoulliModel.independent(g)

        self.assertAlmostEqual(
            bernoulli_model.exact_log_partition(m, h),
            sum(math.log1p(gi * math.expm1(hi)) for gi, hi in zip(g, h)),
        )

    def test_wrong_field_shape(self):
        with self.assertRaises(DomainError):
            bernoulli_model.exact_log_partition(
                BernoulliModel.independent([0.5]), [0.1, 0.2]
            )
