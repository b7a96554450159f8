"""
Moment-cumulant conversions on the partition lattice, cumulants with
products as entries and free cumulants on non-crossing partitions
"""

from itertools import combinations
import logging
import math

from core.exceptions import DomainError, OrderError, SizeLimitError
from cumulants.tables import CumulantTable
from graphs.chromatic import mu_graph
from graphs.structures import SimpleGraph
from partitions.lattice import (
    SetPartition,
    blocks_cross,
    enumerate_noncrossing,
    enumerate_partitions,
    join,
    meet,
    mobius_nc,
    refines,
)

logger = logging.getLogger(__name__)

CONVERSION_LIMIT = 10
PRODUCT_LIMIT = 8
SUBSET_LIMIT = 12


def _check(n, limit, what):
    if n > limit:
        raise SizeLimitError(
            f'{what} is capped at {limit} variables, got {n}', limit=limit
        )


def _labels_of(indices, block):
    return tuple(indices[x - 1] for x in block)


def _product_over_blocks(table, indices, p):
    value = 1
    for block in p.blocks:
        value = value * table[_labels_of(indices, block)]
    return value


def _default_indices(p, indices):
    if indices is None:
        return tuple(range(1, p.n + 1))
    if len(indices) != p.n:
        raise DomainError(f'{len(indices)} labels for partitions of {p.n}')
    return tuple(indices)


def moments_to_cumulants(m, indices):
    """ K_n = Σ_π φ_π μ(π, 1_n) """
    indices = tuple(indices)
    n = len(indices)
    _check(n, CONVERSION_LIMIT, 'moment inversion')
    total = 0
    for p in enumerate_partitions(n):
        k = len(p)
        total = total + (-1) ** (k - 1) * math.factorial(k - 1) * \
            _product_over_blocks(m, indices, p)
    return total


def cumulants_to_moments(k, indices):
    """ φ(a_1 ... a_n) = Σ_π K_π """
    indices = tuple(indices)
    _check(len(indices), CONVERSION_LIMIT, 'cumulant summation')
    total = 0
    for p in enumerate_partitions(len(indices)):
        total = total + _product_over_blocks(k, indices, p)
    return total


def product_cumulant(k, gamma, xi, indices=None):
    """
    K^Γ_ξ = Σ over π with π ∨ Γ = ξ of K_π: the cumulant whose
    entries are the products of the variables grouped by Γ, taken
    blockwise over ξ
    """
    if not refines(gamma, xi):
        raise OrderError(
            f'{xi} is not above {gamma}; use reduced_product_cumulant'
        )
    _check(gamma.n, PRODUCT_LIMIT, 'product cumulants')
    indices = _default_indices(gamma, indices)
    total = 0
    for p in enumerate_partitions(gamma.n):
        if join(p, gamma) == xi:
            total = total + _product_over_blocks(k, indices, p)
    return total


def reduced_product_cumulant(k, gamma, xi, indices=None):
    """ K^(Γ∧ξ)_ξ, defined for any pair Γ, ξ """
    return product_cumulant(k, meet(gamma, xi), xi, indices)


def _restricted_gamma(gamma, block):
    members = set(block)
    parts = [
        tuple(x for x in part if x in members)
        for part in gamma.blocks
    ]
    return [part for part in parts if part]


def gamma_cumulant_table(k, gamma, indices=None):
    """
    For every nonempty subset B of {1..n}: the cumulant of the Γ-grouped
    products of the variables in B, Σ over σ in 𝒫(B) with
    σ ∨ Γ|B = 1_B of K_σ
    """
    _check(gamma.n, PRODUCT_LIMIT, 'product cumulants')
    indices = _default_indices(gamma, indices)
    table = {}
    for size in range(1, gamma.n + 1):
        for block in combinations(range(1, gamma.n + 1), size):
            local = {x: position for position, x in enumerate(block, start=1)}
            restricted = SetPartition(size, tuple(
                tuple(local[x] for x in part)
                for part in _restricted_gamma(gamma, block)
            ))
            sub_indices = _labels_of(indices, block)
            table[block] = product_cumulant(
                k, restricted, SetPartition.coarsest(size), sub_indices
            )
    return table


def interaction_graph(p, gamma):
    """ G_{π,Γ}: blocks of π, joined when some block of Γ meets both """
    index = p.block_index()
    edges = set()
    for part in gamma.blocks:
        touched = sorted({index[x] for x in part})
        for u, v in combinations(touched, 2):
            edges.add((u + 1, v + 1))
    return SimpleGraph(len(p), frozenset(edges))


def crossing_graph(p):
    """ G^c_π: blocks of π, joined when they cross """
    return SimpleGraph(len(p), frozenset(
        (i + 1, j + 1)
        for i, j in combinations(range(len(p)), 2)
        if blocks_cross(p.blocks[i], p.blocks[j])
    ))


def inverse_product_cumulant(gamma_cumulants, gamma):
    """ K_n = Σ over π with π ∨ Γ = 1_n of K^Γ_π μ(G_{π,Γ}) """
    _check(gamma.n, PRODUCT_LIMIT, 'product cumulants')
    top = SetPartition.coarsest(gamma.n)
    total = 0
    for p in enumerate_partitions(gamma.n):
        if join(p, gamma) != top:
            continue
        term = mu_graph(interaction_graph(p, gamma))
        for block in p.blocks:
            term = term * gamma_cumulants[block]
        total = total + term
    return total


def free_cumulants_multilinear(m, sequence):
    """ R_n(a_1, ..., a_n) = Σ over π in NC(n) of φ_π μ_NC(π, 1_n) """
    sequence = tuple(sequence)
    n = len(sequence)
    _check(n, CONVERSION_LIMIT, 'free cumulants')
    top = SetPartition.coarsest(n)
    total = 0
    for p in enumerate_noncrossing(n):
        weight = mobius_nc(p, top)
        total = total + weight * _product_over_blocks(m, sequence, p)
    return total


def cumulants_from_subset_moments(moments, N):
    """
    Cumulants of all subsets from moments of all subsets by
    K_I = m_I - Σ over J ⊊ I containing min I of K_J m_(I∖J)
    """
    _check(N, SUBSET_LIMIT, 'subset cumulants')
    cumulants = {}
    for size in range(1, N + 1):
        for subset in combinations(range(1, N + 1), size):
            head, rest = subset[0], subset[1:]
            value = moments[subset]
            for extra in range(len(rest)):
                for chosen in combinations(rest, extra):
                    inner = (head,) + chosen
                    outside = tuple(x for x in rest if x not in chosen)
                    value = value - cumulants[inner] * moments[outside]
            cumulants[subset] = value
    logger.debug('computed %d subset cumulants for N=%d', len(cumulants), N)
    return CumulantTable(N, values=cumulants)
