"""
Tagged bipartite graphs of the cumulant expansions: black graphs,
automorphisms, canonical forms, enumeration of the chromatic class and
white-vertex coverings.

Loops are counted as the cycle rank (first Betti number) of the graph.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
import logging
import math

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from core.exceptions import ClassError, DomainError, SizeLimitError
from graphs.chromatic import mu_graph
from graphs.structures import SimpleGraph, TaggedBipartiteGraph
from partitions.lattice import enumerate_partitions

logger = logging.getLogger(__name__)

AUTOMORPHISM_LIMIT = 12
ENUMERATION_SITES = 6
ENUMERATION_EDGES = 9
COVERING_EDGES = 9


def black_graph(h):
    """ H•: blacks, joined when they share a white neighbour """
    if h.black_count < 1:
        raise DomainError('the black graph needs at least one black vertex')
    edges = set()
    for blacks in h.white_neighbourhoods():
        for u, v in combinations(blacks, 2):
            edges.add((u + 1, v + 1))
    return SimpleGraph(h.black_count, frozenset(edges))


def eta(h):
    """ ∏ over whites of (-1)^(k-1) (k-1)! with k the white degree """
    value = 1
    for k in h.white_degrees():
        value *= (-1) ** (k - 1) * math.factorial(k - 1)
    return value


def cycle_rank(h):
    graph = h.to_networkx()
    return (
        graph.number_of_edges() - graph.number_of_nodes()
        + nx.number_connected_components(graph)
    )


def weight_key(h):
    """
    Monomial a graph contributes: e-exponent per site (sum of the degrees
    of its whites) and the multiset of site sets seen by the blacks
    """
    exponents = Counter()
    for tag, degree in zip(h.white_tags, h.white_degrees()):
        exponents[tag] += degree
    return (
        tuple(sorted(exponents.items())),
        tuple(sorted(h.black_tag_sets())),
    )


def _white_orderings(h):
    """ Tag-preserving relabellings of the whites onto tag-sorted positions """
    order = sorted(range(h.white_count), key=lambda w: h.white_tags[w])
    groups = [members for _, members in _group_by_tag(order, h.white_tags)]
    slots = []
    position = 0
    for members in groups:
        slots.append(list(range(position, position + len(members))))
        position += len(members)
    for arrangement in product(*(permutations(slot) for slot in slots)):
        mapping = {}
        for members, targets in zip(groups, arrangement):
            mapping.update(zip(members, targets))
        yield mapping


def _group_by_tag(order, tags):
    groups = []
    for w in order:
        if groups and groups[-1][0] == tags[w]:
            groups[-1][1].append(w)
        else:
            groups.append((tags[w], [w]))
    return groups


def canonical_form(h):
    """ Invariant of tagged isomorphism: tags and black neighbourhoods """
    tags = tuple(sorted(h.white_tags))
    neighbourhoods = h.black_neighbourhoods()
    best = None
    for mapping in _white_orderings(h):
        key = tuple(sorted(
            tuple(sorted(mapping[w] for w in whites))
            for whites in neighbourhoods
        ))
        if best is None or key < best:
            best = key
    return tags, best


def automorphism_count(h, respect_tags=True):
    """ Order of the automorphism group by exhaustive VF2 search """
    if h.vertex_count > AUTOMORPHISM_LIMIT:
        raise SizeLimitError(
            f'automorphism search is capped at {AUTOMORPHISM_LIMIT} vertices, '
            f'got {h.vertex_count}',
            limit=AUTOMORPHISM_LIMIT,
        )
    graph = h.to_networkx()

    def node_match(first, second):
        if first['colour'] != second['colour']:
            return False
        return not respect_tags or first['tag'] == second['tag']

    matcher = GraphMatcher(graph, graph, node_match=node_match)
    return sum(1 for _ in matcher.isomorphisms_iter())


def _equivalent_black_factor(neighbourhoods):
    value = 1
    for multiplicity in Counter(neighbourhoods).values():
        value *= math.factorial(multiplicity)
    return value


def chromatic_automorphism_count(h):
    """ Permutations of blacks with equal neighbourhoods (chromatic class) """
    if not h.chromatic_class:
        raise ClassError('white tags are not pairwise distinct')
    return _equivalent_black_factor(h.black_neighbourhoods())


def feynman_automorphism_count(h):
    """
    Automorphisms through tag-preserving white permutations that map the
    multiset of black neighbourhoods onto itself
    """
    neighbourhoods = h.black_neighbourhoods()
    reference = Counter(neighbourhoods)
    order = sorted(range(h.white_count), key=lambda w: h.white_tags[w])
    groups = [members for _, members in _group_by_tag(order, h.white_tags)]
    preserving = 0
    for arrangement in product(*(permutations(members) for members in groups)):
        mapping = {}
        for members, targets in zip(groups, arrangement):
            mapping.update(zip(members, targets))
        image = Counter(
            tuple(sorted(mapping[w] for w in whites))
            for whites in neighbourhoods
        )
        if image == reference:
            preserving += 1
    return preserving * _equivalent_black_factor(neighbourhoods)


def chromatic_weight(h):
    """ μ(H•)/|Aut H| as an exact fraction """
    return Fraction(mu_graph(black_graph(h)), chromatic_automorphism_count(h))


def feynman_weight(h):
    """ η(H°)/|Aut H| as an exact fraction """
    return Fraction(eta(h), feynman_automorphism_count(h))


def _tag_sets_connected(tag_sets):
    groups = []
    for tag_set in tag_sets:
        touching = [group for group in groups if group & tag_set]
        merged = set(tag_set).union(*touching)
        groups = [group for group in groups if not group & tag_set]
        groups.append(merged)
    return len(groups) == 1


def _multisets(candidates, budget, start=0):
    """ Nondecreasing index sequences over candidates within an edge budget """
    yield ()
    for k in range(start, len(candidates)):
        size = len(candidates[k])
        if size <= budget:
            for rest in _multisets(candidates, budget - size, k):
                yield (k,) + rest


def enumerate_chromatic_graphs(N, max_edges):
    """ Connected chromatic-class graphs over sites 1..N, one per class """
    if N > ENUMERATION_SITES or max_edges > ENUMERATION_EDGES:
        raise SizeLimitError(
            f'enumeration is capped at N={ENUMERATION_SITES} and '
            f'{ENUMERATION_EDGES} edges, got N={N}, max_edges={max_edges}',
            limit=(ENUMERATION_SITES, ENUMERATION_EDGES),
        )
    if N < 1 or max_edges < 1:
        raise DomainError('site count and edge budget must be positive')
    candidates = [
        frozenset(subset)
        for size in range(1, N + 1)
        for subset in combinations(range(1, N + 1), size)
    ]
    graphs = []
    for picks in _multisets(candidates, max_edges):
        tag_sets = [candidates[k] for k in picks]
        if not tag_sets or not _tag_sets_connected(tag_sets):
            continue
        graphs.append(TaggedBipartiteGraph.from_tag_sets(
            sorted(tuple(sorted(s)) for s in tag_sets)
        ))
    graphs.sort(
        key=lambda h: (len(h.edges), tuple(sorted(h.black_tag_sets())))
    )
    logger.info(
        'enumerated %d chromatic graphs for N=%d, max_edges=%d',
        len(graphs), N, max_edges,
    )
    return graphs


def coverings(g):
    """
    Connected graphs G' that re-identify to g: each white of g is split
    along a partition of its black neighbours. One graph per class, g
    itself included.
    """
    if not g.chromatic_class:
        raise ClassError('coverings are defined for the chromatic class only')
    if len(g.edges) > COVERING_EDGES:
        raise SizeLimitError(
            f'coverings are capped at {COVERING_EDGES} edges, '
            f'got {len(g.edges)}',
            limit=COVERING_EDGES,
        )
    white_blacks = g.white_neighbourhoods()
    choices = []
    for blacks in white_blacks:
        splits = []
        for p in enumerate_partitions(len(blacks)):
            splits.append([
                tuple(blacks[x - 1] for x in block) for block in p.blocks
            ])
        choices.append(splits)

    found = {}
    for selection in product(*choices):
        tags = []
        edges = []
        for w, parts in enumerate(selection):
            for part in parts:
                tags.append(g.white_tags[w])
                edges.extend((b, len(tags) - 1) for b in part)
        candidate = TaggedBipartiteGraph(
            g.black_count, tuple(tags), tuple(edges)
        )
        if not candidate.is_connected():
            continue
        found.setdefault(canonical_form(candidate), candidate)
    logger.debug(
        '%d coverings of a graph with %d edges', len(found), len(g.edges)
    )
    return [found[key] for key in sorted(found)]
