"""
The open SSEP on N sites with unit bulk rates, extraction at site 1 and
injection at site N (reservoir densities 0 and 1). Configuration index s
has site i occupied iff bit i-1 of s is set.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import logging

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import spsolve

from core.exceptions import DomainError, SizeLimitError

logger = logging.getLogger(__name__)

SITE_LIMIT = 12
DENSE_LIMIT = 8
BATCHES = 50
CHUNK = 65536


@dataclass(frozen=True)
class SsepChainState:
    N: int
    occupancy: tuple
    extraction: float = 1.0
    injection: float = 1.0
    bulk: float = 1.0

    def __post_init__(self):
        if self.N < 2:
            raise DomainError(
                f'the chain needs at least two sites, got {self.N}'
            )
        if len(self.occupancy) != self.N or set(self.occupancy) - {0, 1}:
            raise DomainError(f'bad occupancy {self.occupancy!r}')
        if min(self.extraction, self.injection, self.bulk) < 0:
            raise DomainError('rates must be nonnegative')

    @classmethod
    def from_index(cls, N, index, **rates):
        return cls(N, tuple((index >> i) & 1 for i in range(N)), **rates)

    @property
    def index(self):
        return sum(bit << i for i, bit in enumerate(self.occupancy))

    def transitions(self):
        """ (next configuration index, rate) for every allowed move """
        moves = []
        s = self.index
        for i in range(self.N - 1):
            if self.occupancy[i] != self.occupancy[i + 1] and self.bulk:
                moves.append((s ^ (0b11 << i), self.bulk))
        if self.occupancy[0] and self.extraction:
            moves.append((s ^ 1, self.extraction))
        if not self.occupancy[-1] and self.injection:
            moves.append((s ^ (1 << (self.N - 1)), self.injection))
        return moves


def _check(N):
    if N < 2:
        raise DomainError(f'the chain needs at least two sites, got {N}')
    if N > SITE_LIMIT:
        raise SizeLimitError(
            f'the exact chain is capped at N={SITE_LIMIT}, got N={N}',
            limit=SITE_LIMIT,
        )


@lru_cache(maxsize=16)
def transition_table(N):
    return tuple(
        tuple(SsepChainState.from_index(N, s).transitions())
        for s in range(2 ** N)
    )


def generator(N):
    """ Sparse Q-matrix, Q[s, s'] the rate of s -> s' """
    _check(N)
    rows, cols, rates = [], [], []
    for s, moves in enumerate(transition_table(N)):
        for target, rate in moves:
            rows += [s, s]
            cols += [target, s]
            rates += [rate, -rate]
    size = 2 ** N
    return sparse.csr_matrix((rates, (rows, cols)), shape=(size, size))


def exact_steady_state(N):
    """ Stationary law: π Q = 0 with one equation replaced by Σ π = 1 """
    _check(N)
    system = generator(N).T.tolil()
    system[-1, :] = 1.0
    rhs = np.zeros(2 ** N)
    rhs[-1] = 1.0
    if N <= DENSE_LIMIT:
        pi = np.linalg.solve(system.toarray(), rhs)
    else:
        pi = spsolve(system.tocsc(), rhs)
    pi = np.clip(pi, 0.0, None)
    return pi / pi.sum()


def _occupations(N):
    return ((np.arange(2 ** N)[:, None] >> np.arange(N)) & 1).astype(float)


def mean_profile(pi, N):
    """ ⟨τ_i⟩ for i = 1..N """
    return pi @ _occupations(N)


def connected_two_point(pi, N):
    """ ⟨τ_i τ_j⟩ - ⟨τ_i⟩⟨τ_j⟩ as an N x N matrix """
    occupations = _occupations(N)
    means = pi @ occupations
    second = occupations.T @ (pi[:, None] * occupations)
    return second - np.outer(means, means)


def two_point_reference(N):
    """
    -x_i (1 - x_j) / N for i < j with x_i = i/(N+1), symmetrised.

    This is the exact connected correlation of the chain simulated here:
    unit bulk hopping rates, unit extraction at site 1 and unit injection
    at site N, so reservoir densities 0 and 1. Other reservoir rates
    change both the profile x_i and the 1/N prefactor.
    """
    x = np.arange(1, N + 1) / (N + 1)
    reference = -np.outer(x, 1.0 - x) / N
    upper = np.triu(reference, k=1)
    return upper + upper.T


@dataclass
class SimulationStatistics:
    N: int
    t_max: float
    seed: int
    events: int
    means: np.ndarray
    standard_errors: np.ndarray
    short_run: bool = False
    batch_means: np.ndarray = field(default=None, repr=False)

    def to_json(self):
        return {
            'N': self.N,
            't_max': self.t_max,
            'seed': self.seed,
            'events': self.events,
            'means': self.means.tolist(),
            'standard_errors': self.standard_errors.tolist(),
            'short_run': self.short_run,
        }


def minimum_time(N):
    """ Shortest run whose batches outlast the N^2 relaxation time """
    return 20.0 * BATCHES * N ** 2


def _batch_end(batch, batches, width, end):
    if batch >= batches - 1:
        return end
    return min((batch + 1) * width, end)


def simulate_ssep(N, t_max, seed, batches=BATCHES):
    """
    Gillespie simulation from the empty chain. Site means are time
    averages; standard errors come from `batches` equal time batches.
    """
    _check(N)
    if t_max <= 0:
        raise DomainError(f't_max must be positive, got {t_max!r}')
    short_run = t_max < minimum_time(N)
    if short_run:
        logger.warning(
            't_max=%g is short for N=%d (suggested >= %g); '
            'standard errors are unreliable', t_max, N, minimum_time(N),
        )
    table = transition_table(N)
    totals = np.array([sum(rate for _, rate in moves) for moves in table])
    rng = np.random.default_rng(seed)
    dwell = np.zeros((batches, 2 ** N))
    width = t_max / batches

    state, t, events = 0, 0.0, 0
    waits = rng.standard_exponential(CHUNK)
    picks = rng.random(CHUNK)
    cursor = 0
    while t < t_max:
        if cursor == CHUNK:
            waits = rng.standard_exponential(CHUNK)
            picks = rng.random(CHUNK)
            cursor = 0
        stay = waits[cursor] / totals[state]
        end = min(t + stay, t_max)
        while t < end:
            batch = min(int(t / width), batches - 1)
            boundary = _batch_end(batch, batches, width, end)
            if boundary <= t:
                batch += 1
                boundary = _batch_end(batch, batches, width, end)
            dwell[batch, state] += boundary - t
            t = boundary
        threshold = picks[cursor] * totals[state]
        cursor += 1
        for target, rate in table[state]:
            threshold -= rate
            if threshold < 0:
                break
        state = target
        events += 1

    occupations = _occupations(N)
    batch_means = (dwell @ occupations) / dwell.sum(axis=1, keepdims=True)
    means = (dwell.sum(axis=0) @ occupations) / t_max
    errors = batch_means.std(axis=0, ddof=1) / np.sqrt(batches)
    logger.info('simulated N=%d to t=%g: %d events', N, t_max, events)
    return SimulationStatistics(
        N=N, t_max=float(t_max), seed=seed, events=events, means=means,
        standard_errors=errors, short_run=short_run, batch_means=batch_means,
    )
