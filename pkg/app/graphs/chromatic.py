"""
Chromatic polynomials, the lattice of connected partitions and graph
Möbius values
"""

from functools import lru_cache
import logging

import networkx as nx

from core.exceptions import ConnectivityError, DomainError, SizeLimitError
from graphs.structures import SimpleGraph
from partitions.lattice import (
    SetPartition,
    enumerate_partitions,
    meet,
    refines,
)
from partitions.polynomial import IntPolynomial

logger = logging.getLogger(__name__)

CHROMATIC_LIMIT = 16
LATTICE_LIMIT = 10


def _components(vertex_count, edges):
    graph = nx.Graph()
    graph.add_nodes_from(range(vertex_count))
    graph.add_edges_from(edges)
    return [sorted(component) for component in nx.connected_components(graph)]


def _contract(vertex_count, edges, kept, merged):
    """ Identify `merged` with `kept`, drop the loop and parallel edges """
    def image(v):
        if v == merged:
            v = kept
        return v - 1 if v > merged else v

    contracted = set()
    for u, v in edges:
        a, b = image(u), image(v)
        if a != b:
            contracted.add((min(a, b), max(a, b)))
    return vertex_count - 1, frozenset(contracted)


@lru_cache(maxsize=65536)
def _chromatic(vertex_count, edges):
    if not edges:
        return IntPolynomial.monomial(vertex_count)
    if len(edges) == vertex_count * (vertex_count - 1) // 2:
        return IntPolynomial.falling_factorial(vertex_count)

    components = _components(vertex_count, edges)
    if len(components) > 1:
        result = IntPolynomial.constant(1)
        for component in components:
            members = set(component)
            index = {v: k for k, v in enumerate(component)}
            inner = frozenset(
                (index[u], index[v])
                for u, v in edges if u in members
            )
            result = result * _chromatic(len(component), inner)
        return result

    if len(edges) == vertex_count - 1:
        tree = IntPolynomial((-1, 1)) ** (vertex_count - 1)
        return IntPolynomial((0, 1)) * tree

    u, v = max(edges)
    deleted = _chromatic(vertex_count, edges - {(u, v)})
    contracted = _chromatic(*_contract(vertex_count, edges, u, v))
    return deleted - contracted


def chromatic_polynomial(g):
    """ χ_G(z) by deletion-contraction """
    if g.vertex_count > CHROMATIC_LIMIT:
        raise SizeLimitError(
            f'chromatic polynomials are capped at {CHROMATIC_LIMIT} vertices, '
            f'got {g.vertex_count}',
            limit=CHROMATIC_LIMIT,
        )
    edges = frozenset((u - 1, v - 1) for u, v in g.edges)
    return _chromatic(g.vertex_count, edges)


def mu_graph(g):
    """ Coefficient of z in χ_G(z) for a connected graph """
    if not g.is_connected():
        raise ConnectivityError(
            f'graph on {g.vertex_count} vertices is not connected'
        )
    return chromatic_polynomial(g).coefficient(1)


def _check_lattice_size(g):
    if g.vertex_count > LATTICE_LIMIT:
        raise SizeLimitError(
            f'connected-partition lattices are capped at {LATTICE_LIMIT} '
            f'vertices, got {g.vertex_count}',
            limit=LATTICE_LIMIT,
        )


def is_connected_partition(g, p):
    """ Whether every block of p induces a connected subgraph of g """
    graph = g.to_networkx()
    return all(nx.is_connected(graph.subgraph(block)) for block in p.blocks)


def connected_partition_lattice(g):
    """ 𝒫_G, partitions whose blocks induce connected subgraphs """
    _check_lattice_size(g)
    return [
        p for p in enumerate_partitions(g.vertex_count)
        if is_connected_partition(g, p)
    ]


def meet_g(g, p1, p2):
    """ Meet in 𝒫_G: ordinary meet, then split blocks into components """
    if p1.n != g.vertex_count:
        raise DomainError(
            f'partition of {p1.n} elements on a graph with '
            f'{g.vertex_count} vertices'
        )
    blocks = []
    for block in meet(p1, p2).blocks:
        blocks.extend(g.components_of(block))
    return SetPartition(g.vertex_count, tuple(blocks))


def quotient_graph(g, p):
    """ G_π: one vertex per block, edge when an edge of g joins two blocks """
    index = p.block_index()
    return SimpleGraph(len(p), frozenset(
        (index[u] + 1, index[v] + 1)
        for u, v in g.edges if index[u] != index[v]
    ))


def mobius_connected_lattice(g):
    """ μ(0_G, 1_G) computed by the defining recursion on 𝒫_G """
    if not g.is_connected():
        raise ConnectivityError('1_G exists only for connected graphs')
    lattice = connected_partition_lattice(g)
    lattice.sort(key=len, reverse=True)
    values = {}
    for p in lattice:
        values[p] = 1 if len(p) == g.vertex_count else -sum(
            value for below, value in values.items() if refines(below, p)
        )
    logger.debug(
        'computed μ on a lattice of %d connected partitions', len(lattice)
    )
    return values[SetPartition.coarsest(g.vertex_count)]
