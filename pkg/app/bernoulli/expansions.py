"""
Expansions of W = log Z in e_i = exp(h_i) - 1: the sum over chromatic-class
graphs, the sum over their Feynman coverings and the direct Taylor
expansion of log Z used as an oracle
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import logging
import math

from core.exceptions import SizeLimitError
from cumulants.tables import CumulantTable
from bernoulli.series import CombinatorialSeries
from graphs.bipartite import (
    chromatic_weight,
    coverings,
    cycle_rank,
    enumerate_chromatic_graphs,
    feynman_weight,
    weight_key,
)
from partitions.lattice import enumerate_partitions

logger = logging.getLogger(__name__)

SITE_LIMIT = 6
DEGREE_LIMIT = 6


def _check(N, max_degree):
    if N > SITE_LIMIT or max_degree > DEGREE_LIMIT:
        raise SizeLimitError(
            f'expansions are capped at N={SITE_LIMIT} and degree '
            f'{DEGREE_LIMIT}, got N={N}, degree {max_degree}',
            limit=(SITE_LIMIT, DEGREE_LIMIT),
        )


def _exponent_vector(pairs, N):
    exponents = [0] * N
    for site, power in pairs:
        exponents[site - 1] = power
    return tuple(exponents)


def _graph_key(h, N):
    pairs, blocks = weight_key(h)
    return _exponent_vector(pairs, N), blocks


@lru_cache(maxsize=32)
def chromatic_series(N, max_degree):
    """ Σ over connected chromatic graphs of μ(G•)/|Aut G| 𝔴(G) """
    _check(N, max_degree)
    series = CombinatorialSeries(N, max_degree)
    for h in enumerate_chromatic_graphs(N, max_degree):
        series.add(_graph_key(h, N), chromatic_weight(h))
    logger.info('chromatic series N=%d degree %d: %d terms',
                N, max_degree, len(series.terms))
    return series


@lru_cache(maxsize=32)
def feynman_series(N, max_degree):
    """ Σ over connected Feynman-class graphs of η(G°)/|Aut G| 𝔴(G) """
    _check(N, max_degree)
    series = CombinatorialSeries(N, max_degree)
    for h in enumerate_chromatic_graphs(N, max_degree):
        for cover in coverings(h):
            series.add(_graph_key(cover, N), feynman_weight(cover))
    logger.info('Feynman series N=%d degree %d: %d terms',
                N, max_degree, len(series.terms))
    return series


def _log_of_one_plus(x, N, max_degree):
    """ log(1 + X) = Σ_k (-1)^(k+1) X^k / k, X without constant term """
    result = CombinatorialSeries(N, max_degree)
    power = x
    for k in range(1, max_degree + 1):
        result = result + power.scaled(Fraction((-1) ** (k + 1), k))
        power = power * x
        if not power.terms:
            break
    return result


@lru_cache(maxsize=32)
def taylor_series(N, max_degree):
    """
    log of Z = 1 + Σ_I e_I Σ over π in 𝒫(I) of ∏_B K(b_B), with e_I the
    product of e_i over I, expanded exactly in e
    """
    _check(N, max_degree)
    partition_sum = CombinatorialSeries(N, max_degree)
    for size in range(1, min(N, max_degree) + 1):
        for subset in combinations(range(1, N + 1), size):
            exponents = tuple(1 if i in subset else 0 for i in range(1, N + 1))
            for p in enumerate_partitions(size):
                blocks = tuple(
                    tuple(subset[k - 1] for k in block) for block in p.blocks
                )
                partition_sum.add((exponents, blocks), Fraction(1))
    return _log_of_one_plus(partition_sum, N, max_degree)


def taylor_series_from_model(model, max_degree):
    """ Numeric Taylor coefficients of log Z straight from subset moments """
    _check(model.N, max_degree)
    x = CombinatorialSeries(model.N, max_degree)
    for subset, moment in model.subset_moments().items():
        if len(subset) <= max_degree:
            exponents = tuple(
                1 if i in subset else 0 for i in range(1, model.N + 1)
            )
            x.add((exponents, ()), moment)
    return _log_of_one_plus(x, model.N, max_degree).evaluate(None)


def _evaluated(series, table, e):
    numeric = series.evaluate(table)
    if e is not None:
        numeric.value = numeric(list(e))
    return numeric


def graph_expansion_W(table, e=None, max_degree=4):
    return _evaluated(chromatic_series(table.n, max_degree), table, e)


def feynman_expansion_W(table, e=None, max_degree=4):
    return _evaluated(feynman_series(table.n, max_degree), table, e)


def taylor_oracle_W(table, e=None, max_degree=4):
    return _evaluated(taylor_series(table.n, max_degree), table, e)


def scaling_model(N, psi, max_order=4, rng=None):
    """
    Cumulants K(b_I) = N^(1-|I|) ψ(x_I) at positions x_i = i/(N+1), or at
    sorted uniform positions when a generator is given
    """
    if rng is None:
        positions = [i / (N + 1) for i in range(1, N + 1)]
    else:
        positions = sorted(rng.uniform(0.0, 1.0, size=N).tolist())
    values = {}
    for size in range(1, N + 1):
        for subset in combinations(range(1, N + 1), size):
            if size > max_order:
                values[subset] = 0.0
            else:
                points = tuple(positions[i - 1] for i in subset)
                values[subset] = N ** (1 - size) * psi(points)
    return CumulantTable(N, values=values)


def loop_weight_ratio(table, max_degree=4):
    """ Σ|weights of graphs with loops| / Σ|weights of trees| at e = 1 """
    trees, loops = [], []
    for h in enumerate_chromatic_graphs(table.n, max_degree):
        value = float(chromatic_weight(h))
        for block in h.black_tag_sets():
            value *= table[block]
        (trees if cycle_rank(h) == 0 else loops).append(abs(value))
    return math.fsum(loops) / math.fsum(trees)
