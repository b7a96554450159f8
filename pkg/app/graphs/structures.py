"""
Graph value types: simple graphs and tagged bipartite graphs
"""

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from core.exceptions import DomainError


@dataclass(frozen=True)
class SimpleGraph:
    """ Loopless graph without multiple edges on vertices 1..vertex_count """
    vertex_count: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        count = self.vertex_count
        if int(count) != count or count < 1:
            raise DomainError(
                f'vertex count must be positive, got {self.vertex_count}'
            )
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f'self-loop at vertex {u}')
            if not (1 <= u <= count and 1 <= v <= count):
                raise DomainError(f'edge ({u}, {v}) outside 1..{count}')
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, 'edges', frozenset(normalized))

    @classmethod
    def complete(cls, n):
        return cls(n, frozenset(
            (u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
        ))

    @classmethod
    def path(cls, n):
        return cls(n, frozenset((k, k + 1) for k in range(1, n)))

    @classmethod
    def cycle(cls, n):
        return cls(n, frozenset(
            [(k, k + 1) for k in range(1, n)] + [(1, n)]
        ))

    @classmethod
    def from_networkx(cls, graph):
        """ Relabel the nodes of a networkx graph to 1..n in sorted order """
        nodes = sorted(graph.nodes())
        relabel = {node: k for k, node in enumerate(nodes, start=1)}
        return cls(len(nodes), frozenset(
            (relabel[u], relabel[v]) for u, v in graph.edges()
        ))

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data['vertex_count']), frozenset(
                (int(u), int(v)) for u, v in data.get('edges', [])
            ))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f'malformed graph payload: {data!r}') from exc

    def to_json(self):
        return {
            'vertex_count': self.vertex_count,
            'edges': [list(edge) for edge in sorted(self.edges)],
        }

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.vertex_count + 1))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def is_connected_on(self, vertices):
        """ Whether the induced subgraph on `vertices` is connected """
        return nx.is_connected(self.to_networkx().subgraph(vertices))

    def components_of(self, vertices):
        """ Vertex sets of the connected components of an induced subgraph """
        return [
            tuple(sorted(component))
            for component in nx.connected_components(
                self.to_networkx().subgraph(vertices)
            )
        ]

    def disjoint_union(self, other):
        shift = self.vertex_count
        return SimpleGraph(
            self.vertex_count + other.vertex_count,
            self.edges | {(u + shift, v + shift) for u, v in other.edges},
        )

    def glue(self, other, mine, theirs):
        """ Join two graphs by identifying vertex `mine` with `theirs` """
        mapping = {}
        next_label = self.vertex_count + 1
        for v in range(1, other.vertex_count + 1):
            if v == theirs:
                mapping[v] = mine
            else:
                mapping[v] = next_label
                next_label += 1
        return SimpleGraph(
            next_label - 1,
            self.edges | {(mapping[u], mapping[v]) for u, v in other.edges},
        )


@dataclass(frozen=True)
class TaggedBipartiteGraph:
    """
    Bipartite graph with black vertices 0..black_count-1 and white vertices
    0..len(white_tags)-1, each white carrying a site tag.

    Whites adjacent to a common black vertex carry pairwise distinct tags.
    """
    black_count: int
    white_tags: tuple
    edges: tuple

    def __post_init__(self):
        tags = tuple(int(t) for t in self.white_tags)
        edges = tuple(sorted((int(b), int(w)) for b, w in self.edges))
        if self.black_count < 0:
            raise DomainError('black count must be nonnegative')
        if any(t < 1 for t in tags):
            raise DomainError(f'white tags must be site indices >= 1: {tags}')
        for b, w in edges:
            if not (0 <= b < self.black_count and 0 <= w < len(tags)):
                raise DomainError(
                    f'edge ({b}, {w}) references a missing vertex'
                )
        black_degree = Counter(b for b, _ in edges)
        white_degree = Counter(w for _, w in edges)
        isolated_black = [
            b for b in range(self.black_count) if black_degree[b] == 0
        ]
        isolated_white = [w for w in range(len(tags)) if white_degree[w] == 0]
        if isolated_black or isolated_white:
            raise DomainError(
                f'isolated vertices: blacks {isolated_black}, '
                f'whites {isolated_white}'
            )
        for b in range(self.black_count):
            seen = [tags[w] for bb, w in edges if bb == b]
            if len(seen) != len(set(seen)):
                raise DomainError(
                    f'black vertex {b} sees repeated tags {sorted(seen)}'
                )
        object.__setattr__(self, 'white_tags', tags)
        object.__setattr__(self, 'edges', edges)

    @classmethod
    def from_neighbourhoods(cls, white_tags, neighbourhoods):
        """ Build from the white positions adjacent to each black vertex """
        return cls(
            len(neighbourhoods),
            tuple(white_tags),
            tuple(
                (b, w)
                for b, whites in enumerate(neighbourhoods) for w in whites
            ),
        )

    @classmethod
    def from_tag_sets(cls, tag_sets):
        """ Chromatic-class graph whose blacks see the given tag sets """
        tags = sorted({t for tag_set in tag_sets for t in tag_set})
        position = {t: k for k, t in enumerate(tags)}
        return cls.from_neighbourhoods(
            tags,
            [sorted(position[t] for t in tag_set) for tag_set in tag_sets],
        )

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                int(data['blacks']),
                tuple(int(t) for t in data['whites']),
                tuple((int(b), int(w)) for b, w in data['edges']),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f'malformed graph payload: {data!r}') from exc

    def to_json(self):
        return {
            'blacks': self.black_count,
            'whites': list(self.white_tags),
            'edges': [list(edge) for edge in self.edges],
        }

    @property
    def white_count(self):
        return len(self.white_tags)

    @property
    def vertex_count(self):
        return self.black_count + self.white_count

    @property
    def chromatic_class(self):
        """ True when all white tags are distinct """
        return len(set(self.white_tags)) == len(self.white_tags)

    def black_neighbourhoods(self):
        neighbourhoods = [[] for _ in range(self.black_count)]
        for b, w in self.edges:
            neighbourhoods[b].append(w)
        return tuple(tuple(sorted(whites)) for whites in neighbourhoods)

    def white_neighbourhoods(self):
        neighbourhoods = [[] for _ in range(self.white_count)]
        for b, w in self.edges:
            neighbourhoods[w].append(b)
        return tuple(tuple(sorted(blacks)) for blacks in neighbourhoods)

    def white_degrees(self):
        return tuple(len(blacks) for blacks in self.white_neighbourhoods())

    def black_tag_sets(self):
        """ Site sets seen by each black vertex: its cumulant K(b_S) """
        return tuple(
            tuple(sorted(self.white_tags[w] for w in whites))
            for whites in self.black_neighbourhoods()
        )

    def to_networkx(self):
        graph = nx.Graph()
        for b in range(self.black_count):
            graph.add_node(('b', b), colour='black', tag=None)
        for w, tag in enumerate(self.white_tags):
            graph.add_node(('w', w), colour='white', tag=tag)
        graph.add_edges_from((('b', b), ('w', w)) for b, w in self.edges)
        return graph

    def is_connected(self):
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())
