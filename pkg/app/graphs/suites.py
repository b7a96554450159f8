"""
Acceptance suites for chromatic polynomials and the covering identity
"""

import networkx as nx

from core.verification import Measurement, suite
from graphs.bipartite import (
    automorphism_count,
    black_graph,
    chromatic_weight,
    coverings,
    enumerate_chromatic_graphs,
    feynman_weight,
)
from graphs.chromatic import (
    connected_partition_lattice,
    chromatic_polynomial,
    mu_graph,
    quotient_graph,
)
from graphs.structures import SimpleGraph, TaggedBipartiteGraph


def connected_graphs(max_vertices):
    """ Every connected simple graph up to isomorphism, from the atlas """
    return [
        SimpleGraph.from_networkx(graph)
        for graph in nx.graph_atlas_g()
        if 1 <= graph.number_of_nodes() <= max_vertices
        and nx.is_connected(graph)
    ]


def two_triangle_graph():
    """ Five blacks over tags {1}, {1}, {1, 2}, {2}, {2} """
    return TaggedBipartiteGraph.from_tag_sets([(1,), (1,), (1, 2), (2,), (2,)])


def partition_sum_defect(g, k):
    """ Σ over 𝒫_G of χ_(G_π)(k), minus k^|V| """
    total = sum(
        chromatic_polynomial(quotient_graph(g, p))(k)
        for p in connected_partition_lattice(g)
    )
    return total - k ** g.vertex_count


@suite('chromatic')
def chromatic_suite(seed):
    graphs = connected_graphs(6)
    failures = [
        (g.to_json(), k)
        for g in graphs for k in range(1, 6)
        if partition_sum_defect(g, k) != 0
    ]
    h = two_triangle_graph()
    named = {
        'mu_K3': mu_graph(SimpleGraph.complete(3)) == 2,
        'mu_paths': all(
            mu_graph(SimpleGraph.path(n)) == (-1) ** (n - 1)
            for n in range(1, 7)
        ),
        'mu_two_triangles': mu_graph(black_graph(h)) == 4,
        'aut_two_triangles': automorphism_count(h, respect_tags=False) == 8,
    }
    wrong = len(failures) + sum(not ok for ok in named.values())
    return Measurement(wrong, 0, details={
        'graphs': len(graphs),
        'failures': failures[:10],
        'checks': named,
    })


@suite('covering')
def covering_suite(seed):
    checked, mismatches = 0, []
    for g in enumerate_chromatic_graphs(3, 9):
        if g.black_count > 3 or g.white_count > 3:
            continue
        covered = sum(feynman_weight(cover) for cover in coverings(g))
        checked += 1
        if covered != chromatic_weight(g):
            mismatches.append(g.to_json())
    return Measurement(len(mismatches), 0, details={
        'graphs': checked,
        'mismatches': mismatches[:10],
    })
