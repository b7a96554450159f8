"""
Correlated Bernoulli variables b_1..b_N given by the exact joint law
"""

from itertools import combinations
import logging
import math

import numpy as np

from core.exceptions import DomainError, ModelError, SizeLimitError
from cumulants.conversions import (
    cumulants_from_subset_moments,
    inverse_product_cumulant,
)
from partitions.lattice import SetPartition

logger = logging.getLogger(__name__)

SITE_LIMIT = 12
NORMALISATION_TOLERANCE = 1e-12
RECONSTRUCTION_LIMIT = 8


class BernoulliModel:
    """
    Probabilities of the 2^N configurations. Configuration index c has
    b_i = bit i-1 of c; in bit strings position i-1 is site i.
    """

    def __init__(self, N, probabilities):
        if N < 1 or N > SITE_LIMIT:
            raise SizeLimitError(
                f'exact models are capped at N={SITE_LIMIT}, got N={N}',
                limit=SITE_LIMIT,
            )
        probabilities = np.asarray(probabilities, dtype=float)
        if probabilities.shape != (2 ** N,):
            raise ModelError(
                f'expected {2 ** N} configuration weights, '
                f'got {probabilities.shape}'
            )
        if np.any(probabilities < 0) or not np.all(np.isfinite(probabilities)):
            raise ModelError('configuration weights must be finite and >= 0')
        total = math.fsum(probabilities)
        if abs(total - 1.0) > NORMALISATION_TOLERANCE:
            raise ModelError(f'weights sum to {total!r}, not 1')
        self.N = N
        self.probabilities = probabilities
        self.probabilities.setflags(write=False)
        self.occupations = (
            (np.arange(2 ** N)[:, None] >> np.arange(N)) & 1
        ).astype(bool)

    @classmethod
    def independent(cls, g):
        g = np.asarray(g, dtype=float)
        if np.any(g < 0) or np.any(g > 1):
            raise ModelError('site probabilities must lie in [0, 1]')
        N = g.size
        occupations = (np.arange(2 ** N)[:, None] >> np.arange(N)) & 1
        weights = np.prod(np.where(occupations == 1, g, 1.0 - g), axis=1)
        return cls(N, weights / math.fsum(weights))

    @classmethod
    def random(cls, N, rng):
        """ Joint law drawn from a flat Dirichlet distribution """
        return cls(N, rng.dirichlet(np.ones(2 ** N)))

    @classmethod
    def from_bitstrings(cls, N, probs):
        weights = np.zeros(2 ** N)
        for bits, p in probs.items():
            if len(bits) != N or set(bits) - {'0', '1'}:
                raise ModelError(f'bad configuration {bits!r} for N={N}')
            index = sum(1 << i for i, bit in enumerate(bits) if bit == '1')
            weights[index] += p
        return cls(N, weights)

    @classmethod
    def from_json(cls, data):
        if 'independent' in data:
            return cls.independent(data['independent'])
        try:
            return cls.from_bitstrings(int(data['N']), data['probs'])
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelError(f'malformed model payload: {exc}') from exc

    def to_json(self):
        return {
            'N': self.N,
            'probs': {
                ''.join('1' if bit else '0' for bit in self.occupations[c]): p
                for c, p in enumerate(self.probabilities.tolist()) if p
            },
        }

    def _check_sites(self, sites):
        for i in sites:
            if not 1 <= i <= self.N:
                raise DomainError(f'site {i} outside 1..{self.N}')

    def subset_moment(self, sites):
        """ E[∏_(i in sites) b_i] = P(b_i = 1 for all i in sites) """
        sites = sorted(set(sites))
        self._check_sites(sites)
        if not sites:
            return 1.0
        mask = np.all(self.occupations[:, [i - 1 for i in sites]], axis=1)
        return math.fsum(self.probabilities[mask])

    def subset_moments(self):
        return {
            subset: self.subset_moment(subset)
            for size in range(1, self.N + 1)
            for subset in combinations(range(1, self.N + 1), size)
        }

    def means(self):
        return np.array([
            self.subset_moment([i]) for i in range(1, self.N + 1)
        ])


def exact_log_partition(model, h):
    """ W[h] = log E[exp(Σ h_i b_i)] by enumeration """
    h = np.asarray(h, dtype=float)
    if h.shape != (model.N,):
        raise DomainError(f'expected {model.N} fields, got shape {h.shape}')
    exponents = model.occupations @ h
    shift = float(np.max(exponents))
    return shift + math.log(math.fsum(
        model.probabilities * np.exp(exponents - shift)
    ))


def noncoincident_cumulants(model):
    """ K(b_I) for all 2^N - 1 nonempty subsets I of distinct sites """
    return cumulants_from_subset_moments(model.subset_moments(), model.N)


def coincidence_partition(indices):
    """ Γ: positions k, l share a block iff indices[k] == indices[l] """
    return SetPartition.from_labels(list(indices))


def reconstruct_coincident_cumulant(table, indices):
    """
    K_n(b_(i_1), ..., b_(i_n)) with repeated sites, from non-coincident
    cumulants through the Γ-cumulant inversion with b_i^2 = b_i
    """
    indices = tuple(int(i) for i in indices)
    if len(indices) > RECONSTRUCTION_LIMIT:
        raise SizeLimitError(
            f'reconstruction is capped at {RECONSTRUCTION_LIMIT} indices',
            limit=RECONSTRUCTION_LIMIT,
        )
    for i in indices:
        if not 1 <= i <= table.n:
            raise DomainError(f'site {i} outside 1..{table.n}')
    gamma = coincidence_partition(indices)
    blocks = {}
    for size in range(1, len(indices) + 1):
        for block in combinations(range(1, len(indices) + 1), size):
            sites = sorted({indices[x - 1] for x in block})
            blocks[block] = table[sites]
    return inverse_product_cumulant(blocks, gamma)
