"""
Set partitions of {1..n}, the refinement lattice, non-crossing partitions
and their Möbius functions
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
import math

from core.exceptions import DomainError, OrderError, SizeLimitError

ENUMERATION_LIMIT = 12
CACHE_LIMIT = 8


@dataclass(frozen=True)
class SetPartition:
    """ Partition of {1..n} in canonical form """
    n: int
    blocks: tuple

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(
                f'ground set size must be positive, got {self.n}'
            )
        canonical = tuple(sorted(
            tuple(sorted(block)) for block in self.blocks
        ))
        elements = [x for block in canonical for x in block]
        if any(len(block) == 0 for block in canonical):
            raise DomainError('blocks must be nonempty')
        if sorted(elements) != list(range(1, self.n + 1)):
            raise DomainError(
                f'blocks {canonical} do not partition {{1..{self.n}}}'
            )
        object.__setattr__(self, 'blocks', canonical)

    @classmethod
    def finest(cls, n):
        """ 0_n, all singletons """
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def coarsest(cls, n):
        """ 1_n, a single block """
        return cls(n, (tuple(range(1, n + 1)),))

    @classmethod
    def from_labels(cls, labels):
        """ Build from a block label per element, element i+1 ↦ labels[i] """
        groups = {}
        for element, label in enumerate(labels, start=1):
            groups.setdefault(label, []).append(element)
        return cls(len(labels), tuple(groups.values()))

    @classmethod
    def from_json(cls, data, n=None):
        """ Parse the list-of-lists form, e.g. [[1, 3], [2]] """
        try:
            blocks = tuple(tuple(int(x) for x in block) for block in data)
        except (TypeError, ValueError) as exc:
            raise DomainError(
                f'not a list of integer blocks: {data!r}'
            ) from exc
        if n is None:
            n = sum(len(block) for block in blocks)
        return cls(n, blocks)

    def to_json(self):
        return [list(block) for block in self.blocks]

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        inner = ','.join(
            '{' + ','.join(str(x) for x in block) + '}'
            for block in self.blocks
        )
        return '{' + inner + '}'

    def block_index(self):
        """ Map element -> position of its block """
        return {
            x: position
            for position, block in enumerate(self.blocks)
            for x in block
        }

    def restrict(self, subset):
        """ Induced partition of `subset`, relabelled to 1..|subset| """
        ordered = sorted(subset)
        relabel = {x: i for i, x in enumerate(ordered, start=1)}
        members = set(ordered)
        blocks = []
        for block in self.blocks:
            inside = [relabel[x] for x in block if x in members]
            if inside:
                blocks.append(inside)
        return SetPartition(len(ordered), tuple(blocks))


class _UnionFind:
    """ Disjoint sets over 1..n with path compression """

    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)

    def partition(self, n):
        groups = {}
        for x in range(1, n + 1):
            groups.setdefault(self.find(x), []).append(x)
        return SetPartition(n, tuple(groups.values()))


def _check_size(n):
    if int(n) != n or n < 1:
        raise DomainError(f'n must be a positive integer, got {n}')
    if n > ENUMERATION_LIMIT:
        raise SizeLimitError(
            f'enumeration is capped at n={ENUMERATION_LIMIT}, got n={n}',
            limit=ENUMERATION_LIMIT,
        )


def _same_ground_set(p1, p2):
    if p1.n != p2.n:
        raise DomainError(f'partitions of different sets: {p1.n} != {p2.n}')


def bell_number(n):
    """ Number of partitions of an n-set """
    row = [1]
    for _ in range(n):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[0]


def catalan_number(n):
    return math.comb(2 * n, n) // (n + 1)


def _restricted_growth_strings(n):
    labels = [0] * n
    maxima = [0] * n

    def grow(position):
        if position == n:
            yield tuple(labels)
            return
        for label in range(maxima[position - 1] + 2):
            labels[position] = label
            maxima[position] = max(maxima[position - 1], label)
            yield from grow(position + 1)

    yield from grow(1)


def iter_partitions(n):
    """ Lazily yield every partition of {1..n} """
    _check_size(n)
    for labels in _restricted_growth_strings(n):
        yield SetPartition.from_labels(labels)


@lru_cache(maxsize=None)
def _cached_partitions(n):
    return tuple(iter_partitions(n))


def enumerate_partitions(n):
    """ All partitions of {1..n}, canonical, Bell(n) of them """
    _check_size(n)
    if n <= CACHE_LIMIT:
        return list(_cached_partitions(n))
    return list(iter_partitions(n))


def refines(p1, p2):
    """ True when every block of p1 sits inside a block of p2 """
    _same_ground_set(p1, p2)
    index = p2.block_index()
    return all(len({index[x] for x in block}) == 1 for block in p1.blocks)


def join(p1, p2):
    """ Finest common coarsening """
    _same_ground_set(p1, p2)
    sets = _UnionFind(p1.n)
    for block in p1.blocks + p2.blocks:
        for x in block[1:]:
            sets.union(block[0], x)
    return sets.partition(p1.n)


def meet(p1, p2):
    """ Blockwise intersections """
    _same_ground_set(p1, p2)
    blocks = []
    for first in p1.blocks:
        members = set(first)
        for second in p2.blocks:
            common = members.intersection(second)
            if common:
                blocks.append(tuple(common))
    return SetPartition(p1.n, tuple(blocks))


def mobius_partition_lattice(p1, p2):
    """ μ(p1, p2) on the partition lattice, exact integer """
    if not refines(p1, p2):
        raise OrderError(f'{p1} does not refine {p2}')
    index = p2.block_index()
    counts = [0] * len(p2)
    for block in p1.blocks:
        counts[index[block[0]]] += 1
    value = 1
    for k in counts:
        value *= (-1) ** (k - 1) * math.factorial(k - 1)
    return value


def blocks_cross(first, second):
    """ True if a < b < c < d with a, c in one block and b, d in the other """
    tagged = sorted([(x, 0) for x in first] + [(x, 1) for x in second])
    runs = 1
    for (_, before), (_, after) in zip(tagged, tagged[1:]):
        if before != after:
            runs += 1
    return runs >= 4


def crossing_pairs(p):
    """ Index pairs of crossing blocks """
    return [
        (i, j)
        for i, j in combinations(range(len(p)), 2)
        if blocks_cross(p.blocks[i], p.blocks[j])
    ]


def is_noncrossing(p):
    return not crossing_pairs(p)


@lru_cache(maxsize=None)
def _nc_patterns(length):
    """ Non-crossing partitions of positions 0..length-1, as block tuples """
    if length == 0:
        return ((),)
    patterns = []
    rest = range(1, length)
    for size in range(length):
        for chosen in combinations(rest, size):
            block = (0,) + chosen
            bounds = block + (length,)
            gaps = [
                (bounds[k] + 1, bounds[k + 1])
                for k in range(len(block))
                if bounds[k + 1] > bounds[k] + 1
            ]
            choices = [
                [
                    tuple(tuple(start + x for x in b) for b in pattern)
                    for pattern in _nc_patterns(stop - start)
                ]
                for start, stop in gaps
            ]
            for parts in product(*choices):
                patterns.append(
                    (block,) + tuple(b for part in parts for b in part)
                )
    return tuple(patterns)


def enumerate_noncrossing(n):
    """ NC(n), Catalan(n) partitions """
    _check_size(n)
    return [
        SetPartition(n, tuple(tuple(x + 1 for x in b) for b in pattern))
        for pattern in _nc_patterns(n)
    ]


def least_nc_majorant(p):
    """ Smallest non-crossing partition above p """
    blocks = [set(block) for block in p.blocks]
    while True:
        current = SetPartition(p.n, tuple(blocks))
        pairs = crossing_pairs(current)
        if not pairs:
            return current
        i, j = pairs[0]
        blocks = [
            set(block) for k, block in enumerate(current.blocks)
            if k not in (i, j)
        ]
        blocks.append(set(current.blocks[i]) | set(current.blocks[j]))


def _kreweras_cycle_sizes(p):
    """ Cycle type of P_p^{-1} γ: block sizes of the Kreweras complement """
    n = p.n
    inverse = {}
    for block in p.blocks:
        for current, following in zip(block, block[1:] + block[:1]):
            inverse[following] = current
    sigma = {i: inverse[i % n + 1] for i in range(1, n + 1)}
    seen = set()
    sizes = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        size = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = sigma[x]
            size += 1
        sizes.append(size)
    return sizes


def mobius_nc(p1, p2):
    """ μ(p1, p2) on the lattice of non-crossing partitions """
    _same_ground_set(p1, p2)
    for p in (p1, p2):
        if not is_noncrossing(p):
            raise DomainError(f'{p} is not non-crossing')
    if not refines(p1, p2):
        raise OrderError(f'{p1} does not refine {p2}')
    value = 1
    for block in p2.blocks:
        for size in _kreweras_cycle_sizes(p1.restrict(block)):
            value *= (-1) ** (size - 1) * catalan_number(size - 1)
    return value
