"""
Acceptance suite for the expansions of log Z
"""

from fractions import Fraction

import numpy as np

from bernoulli.expansions import (
    chromatic_series,
    feynman_expansion_W,
    graph_expansion_W,
    taylor_oracle_W,
    taylor_series,
    taylor_series_from_model,
)
from bernoulli.model import BernoulliModel, noncoincident_cumulants
from core.verification import Measurement, suite

TWO_TRIANGLE_BLOCKS = [(1,), (1,), (1, 2), (2,), (2,)]


@suite('expansion')
def expansion_suite(seed):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(20):
        model = BernoulliModel.random(3, rng)
        table = noncoincident_cumulants(model)
        oracle = taylor_series_from_model(model, 4)
        for series in (
            graph_expansion_W(table, max_degree=4),
            feynman_expansion_W(table, max_degree=4),
            taylor_oracle_W(table, max_degree=4),
        ):
            worst = max(worst, series.max_difference(oracle))
    monomial = {
        'chromatic': chromatic_series(2, 6).coefficient(
            (3, 3), TWO_TRIANGLE_BLOCKS
        ),
        'taylor': taylor_series(2, 6).coefficient(
            (3, 3), TWO_TRIANGLE_BLOCKS
        ),
    }
    exact = all(value == Fraction(1) for value in monomial.values())
    return Measurement(
        worst, 1e-9, passed=worst <= 1e-9 and exact,
        details={'monomial_coefficients': monomial},
    )
