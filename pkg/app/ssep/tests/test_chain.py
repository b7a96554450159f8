"""
Tests for the exact open SSEP chain and its simulation
"""

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DomainError, SizeLimitError
from ssep import chain
from ssep.chain import SsepChainState


class ChainStateTests(SimpleTestCase):
    """ Test configurations and their moves """

    def test_index_round_trip(self):
        state = SsepChainState.from_index(3, 0b101)

        self.assertEqual(state.occupancy, (1, 0, 1))
        self.assertEqual(state.index, 5)

    def test_empty_chain_only_injects(self):
        state = SsepChainState(2, (0, 0))

        self.assertEqual(state.transitions(), [(0b10, 1.0)])

    def test_moves_of_first_site(self):
        state = SsepChainState(2, (1, 0))

        self.assertCountEqual(
            state.transitions(), [(0b10, 1.0), (0b00, 1.0), (0b11, 1.0)]
        )

    def test_single_site(self):
        with self.assertRaises(DomainError):
            SsepChainState(1, (0,))

    def test_bad_occupancy(self):
        with self.assertRaises(DomainError):
            SsepChainState(2, (0, 2))


class SteadyStateTests(SimpleTestCase):
    """ Test the exact stationary law """

    def test_generator_rows_sum_to_zero(self):
        Q = chain.generator(4).toarray()

        np.testing.assert_allclose(Q.sum(axis=1), 0.0, atol=1e-14)

    def test_two_sites(self):
        """ Test π = (1, 1, 3, 1)/6 over configurations 00, 10, 01, 11 """
        pi = chain.exact_steady_state(2)

        np.testing.assert_allclose(pi, np.array([1, 1, 3, 1]) / 6)

    def test_linear_profile(self):
        N = 6
        pi = chain.exact_steady_state(N)

        np.testing.assert_allclose(
            chain.mean_profile(pi, N),
            np.arange(1, N + 1) / (N + 1),
            atol=1e-10,
        )

    def test_two_point_function(self):
        N = 5
        pi = chain.exact_steady_state(N)

        two_point = chain.connected_two_point(pi, N)

        np.testing.assert_allclose(
            np.triu(two_point, k=1),
            np.triu(chain.two_point_reference(N), k=1),
            atol=1e-10,
        )
        self.assertTrue(np.all(np.triu(two_point, k=1)[
            np.triu_indices(N, k=1)
        ] < 0))

    def test_sparse_solve(self):
        N = chain.DENSE_LIMIT + 1
        pi = chain.exact_steady_state(N)

        self.assertAlmostEqual(chain.mean_profile(pi, N)[0], 1 / (N + 1))

    def test_site_cap(self):
        with self.assertRaises(SizeLimitError):
            chain.generator(chain.SITE_LIMIT + 1)


class SimulationTests(SimpleTestCase):
    """ Test the Gillespie simulation """

    def test_reproducible(self):
        first = chain.simulate_ssep(3, 2000.0, seed=4)
        second = chain.simulate_ssep(3, 2000.0, seed=4)

        self.assertEqual(first.events, second.events)
        np.testing.assert_array_equal(first.means, second.means)

    def test_short_run_is_flagged(self):
        with self.assertLogs('ssep.chain', level='WARNING'):
            stats = chain.simulate_ssep(3, 100.0, seed=1)

        self.assertTrue(stats.short_run)
        self.assertEqual(len(stats.to_json()['means']), 3)
        self.assertTrue(np.all((stats.means >= 0) & (stats.means <= 1)))

    def test_means_approach_linear_profile(self):
        N = 3
        stats = chain.simulate_ssep(N, chain.minimum_time(N), seed=7)

        self.assertFalse(stats.short_run)
        deviation = np.abs(stats.means - np.arange(1, N + 1) / (N + 1))
        self.assertTrue(np.all(deviation < 5 * stats.standard_errors + 1e-3))

    def test_non_positive_time(self):
        with self.assertRaises(DomainError):
            chain.simulate_ssep(3, 0.0, seed=1)
