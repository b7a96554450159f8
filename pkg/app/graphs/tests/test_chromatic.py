"""
Tests for chromatic polynomials and connected-partition lattices
"""

from django.test import SimpleTestCase

from core.exceptions import ConnectivityError, SizeLimitError
from graphs import chromatic
from graphs.structures import SimpleGraph
from graphs.suites import connected_graphs, partition_sum_defect
from partitions.lattice import SetPartition
from partitions.polynomial import IntPolynomial

Z = IntPolynomial.monomial(1)


class ChromaticPolynomialTests(SimpleTestCase):
    """ Test χ_G on graph families with known polynomials """

    def test_complete_graph(self):
        for n in range(1, 7):
            self.assertEqual(
                chromatic.chromatic_polynomial(SimpleGraph.complete(n)),
                IntPolynomial.falling_factorial(n),
            )

    def test_path_is_a_tree(self):
        """ Test χ of a tree on n vertices is z(z-1)^(n-1) """
        for n in range(1, 7):
            self.assertEqual(
                chromatic.chromatic_polynomial(SimpleGraph.path(n)),
                Z * (Z - 1) ** (n - 1),
            )

    def test_cycle(self):
        """ Test χ(C_n) = (z-1)^n + (-1)^n (z-1) """
        for n in range(3, 8):
            expected = (Z - 1) ** n + (-1) ** n * (Z - 1)
            self.assertEqual(
                chromatic.chromatic_polynomial(SimpleGraph.cycle(n)),
                expected,
            )

    def test_disconnected_graph_multiplies(self):
        g = SimpleGraph.complete(3).disjoint_union(SimpleGraph.path(2))

        self.assertEqual(
            chromatic.chromatic_polynomial(g),
            IntPolynomial.falling_factorial(3) * Z * (Z - 1),
        )

    def test_vertex_cap(self):
        with self.assertRaises(SizeLimitError):
            chromatic.chromatic_polynomial(
                SimpleGraph(chromatic.CHROMATIC_LIMIT + 1)
            )


class MobiusGraphTests(SimpleTestCase):
    """ Test μ(G) and the connected-partition lattice """

    def test_mu_known_values(self):
        self.assertEqual(chromatic.mu_graph(SimpleGraph.complete(3)), 2)
        self.assertEqual(chromatic.mu_graph(SimpleGraph.complete(4)), -6)
        self.assertEqual(chromatic.mu_graph(SimpleGraph.cycle(4)), -3)

    def test_mu_two_triangles_sharing_a_vertex(self):
        triangle = SimpleGraph.complete(3)

        self.assertEqual(chromatic.mu_graph(triangle.glue(triangle, 3, 1)), 4)

    def test_mu_requires_connected_graph(self):
        with self.assertRaises(ConnectivityError):
            chromatic.mu_graph(SimpleGraph(2))

    def test_lattice_recursion_matches_linear_coefficient(self):
        """ Test μ(0_G, 1_G) from the lattice equals [z]χ_G """
        for g in connected_graphs(5):
            self.assertEqual(
                chromatic.mobius_connected_lattice(g),
                chromatic.mu_graph(g),
            )

    def test_partition_sum_identity(self):
        """ Test Σ over 𝒫_G of χ(G_π)(k) = k^n """
        for g in [SimpleGraph.cycle(4), SimpleGraph.complete(4),
                  SimpleGraph.path(5)]:
            for k in range(1, 5):
                self.assertEqual(partition_sum_defect(g, k), 0)

    def test_connected_partitions_of_path(self):
        """ Test 𝒫 of a path has 2^(n-1) members """
        lattice = chromatic.connected_partition_lattice(SimpleGraph.path(4))

        self.assertEqual(len(lattice), 8)

    def test_meet_splits_disconnected_blocks(self):
        g = SimpleGraph.path(3)
        p1 = SetPartition.coarsest(3)
        p2 = SetPartition(3, ((1, 3), (2,)))

        self.assertEqual(
            chromatic.meet_g(g, p1, p2), SetPartition.finest(3)
        )

    def test_quotient_graph(self):
        g = SimpleGraph.cycle(4)
        p = SetPartition(4, ((1, 2), (3, 4)))

        self.assertEqual(
            chromatic.quotient_graph(g, p), SimpleGraph.path(2)
        )
