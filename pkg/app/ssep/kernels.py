"""
Connected correlations of the open SSEP in the scaling limit.

ψ#_n are the free cumulants of the indicator functions 1_[0, x_i], whose
joint moments are min(x_1, ..., x_n); ψ^ssep_n is their signed sum over
orderings modulo cyclic rotations.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
import math

import numpy as np

from core.exceptions import CoincidenceError, DomainError, SizeLimitError
from freeprob.transforms import (
    b_from_a,
    free_cumulants_from_moments,
    moments_of_b,
)
from partitions.lattice import SetPartition, enumerate_noncrossing, mobius_nc
from scaling.kernels import CumulantKernelSet

SHARP_LIMIT = 8
CYCLIC_LIMIT = 7


@dataclass(frozen=True)
class OrderedPoints:
    """ 0 < x_1 < ... < x_n < 1 """
    xs: tuple

    def __post_init__(self):
        xs = tuple(float(x) for x in self.xs)
        if not xs:
            raise DomainError('at least one point is needed')
        if any(not 0 < x < 1 for x in xs):
            raise DomainError(f'points must lie in (0, 1): {xs}')
        if any(b <= a for a, b in zip(xs, xs[1:])):
            if len(set(xs)) != len(xs):
                raise CoincidenceError(f'coincident points: {xs}')
            raise DomainError(f'points must be increasing: {xs}')
        object.__setattr__(self, 'xs', xs)

    def __len__(self):
        return len(self.xs)


@lru_cache(maxsize=None)
def _nc_terms(n):
    top = SetPartition.coarsest(n)
    return tuple(
        (mobius_nc(p, top), tuple(tuple(x - 1 for x in b) for b in p.blocks))
        for p in enumerate_noncrossing(n)
    )


def psi_sharp_values(*points):
    """ ψ#_n on broadcastable arrays, one array per argument, order kept """
    n = len(points)
    points = np.broadcast_arrays(*[np.asarray(x, dtype=float) for x in points])
    total = np.zeros(points[0].shape)
    for coefficient, blocks in _nc_terms(n):
        term = np.full(points[0].shape, float(coefficient))
        for block in blocks:
            smallest = points[block[0]]
            for k in block[1:]:
                smallest = np.minimum(smallest, points[k])
            term = term * smallest
        total += term
    return total


def psi_sharp(points):
    """ Free cumulant R_n(1_[0,x_1], ..., 1_[0,x_n]) for distinct points """
    points = tuple(float(x) for x in points)
    if len(points) > SHARP_LIMIT:
        raise SizeLimitError(
            f'ψ# is capped at {SHARP_LIMIT} points', limit=SHARP_LIMIT
        )
    if len(set(points)) != len(points):
        raise CoincidenceError(f'coincident points: {points}')
    if any(not 0 < x < 1 for x in points):
        raise DomainError(f'points must lie in (0, 1): {points}')
    return float(psi_sharp_values(*points))


@lru_cache(maxsize=None)
def _cyclic_classes(n):
    """ One ordering per class modulo rotation: those fixing position 0 """
    return tuple((0,) + rest for rest in permutations(range(1, n)))


def psi_ssep_values(*points):
    """ Symmetric ψ^ssep_n on broadcastable arrays """
    n = len(points)
    ordered = np.sort(np.stack(np.broadcast_arrays(
        *[np.asarray(x, dtype=float) for x in points]
    )), axis=0)
    total = np.zeros(ordered.shape[1:])
    for order in _cyclic_classes(n):
        total += psi_sharp_values(*(ordered[k] for k in order))
    return (-1) ** (n - 1) * total


def psi_ssep(points):
    """ (-1)^(n-1) Σ over orderings modulo rotation of ψ# """
    if not isinstance(points, OrderedPoints):
        points = OrderedPoints(tuple(points))
    if len(points) > CYCLIC_LIMIT:
        raise SizeLimitError(
            f'the cyclic sum is capped at {CYCLIC_LIMIT} points',
            limit=CYCLIC_LIMIT,
        )
    return float(psi_ssep_values(*points.xs))


def ssep_kernel_set(n_max=6, intervals=None):
    """ Kernels ψ^ssep_1..ψ^ssep_n_max for tensor quadrature """
    return CumulantKernelSet(
        psi={
            n: (lambda *xs: psi_ssep_values(*xs))
            for n in range(1, n_max + 1)
        },
        intervals=intervals or {},
    )


def psi_functional(a, n):
    """
    ψ_n[a] = ∫ a(x_1)...a(x_n) ψ^ssep_n = -(n-1)! R_n(b), where R_n(b) is
    the n-th free cumulant of b(x) = -∫_x^1 a
    """
    b = b_from_a(a)
    cumulants = free_cumulants_from_moments(moments_of_b(b, n), n)
    return -math.factorial(n - 1) * cumulants[n - 1]
