"""
Acceptance suite for the cumulant algebra
"""

from itertools import product

import numpy as np

from core.verification import Measurement, suite
from cumulants.conversions import (
    cumulants_to_moments,
    gamma_cumulant_table,
    inverse_product_cumulant,
    moments_to_cumulants,
    product_cumulant,
)
from cumulants.tables import CumulantTable, MomentTable
from partitions.lattice import SetPartition


class DiscreteLaw:
    """ Joint law of `variables` variables on a finite product support """

    def __init__(self, rng, variables=3, support=3):
        self.variables = variables
        self.outcomes = np.array(list(product(
            *[rng.uniform(-1.0, 1.0, size=support)] * variables
        )))
        self.weights = rng.dirichlet(np.ones(len(self.outcomes)))

    def moment(self, labels):
        columns = [label - 1 for label in labels]
        return float(self.weights @ np.prod(self.outcomes[:, columns], axis=1))

    def moments(self):
        return MomentTable.from_function(self.variables, self.moment)

    def grouped_cumulant(self, labels, gamma):
        """ Cumulant of the products ∏_(i in B) X_(labels[i]), B in Γ """
        products = np.stack([
            np.prod(
                self.outcomes[:, [labels[i - 1] - 1 for i in block]], axis=1
            )
            for block in gamma.blocks
        ], axis=1)

        def moment(key):
            columns = products[:, [j - 1 for j in key]]
            return float(self.weights @ np.prod(columns, axis=1))

        table = MomentTable.from_function(len(gamma), moment)
        return moments_to_cumulants(table, range(1, len(gamma) + 1))


def random_labels(rng, n, alphabet):
    return tuple(int(x) for x in rng.integers(1, alphabet + 1, size=n))


def random_partition(rng, n):
    return SetPartition.from_labels(
        [int(x) for x in rng.integers(0, max(1, n - 1), size=n)]
    )


def round_trip_error(rng):
    n = int(rng.integers(1, 7))
    moments = MomentTable.tabulate(2, lambda key: float(rng.normal()), n)
    cumulants = CumulantTable(2, values={
        key: moments_to_cumulants(moments, key) for key, _ in moments.items()
    })
    scale = max(1.0, max(abs(value) for _, value in cumulants.items()))
    return max(
        abs(cumulants_to_moments(cumulants, key) - value)
        for key, value in moments.items()
    ) / scale


@suite('cumulants')
def cumulants_suite(seed):
    rng = np.random.default_rng(seed)
    round_trip = max(round_trip_error(rng) for _ in range(100))

    product_error, inverse_error = 0.0, 0.0
    for _ in range(20):
        law = DiscreteLaw(rng)
        n = int(rng.integers(2, 6))
        labels = random_labels(rng, n, law.variables)
        gamma = random_partition(rng, n)
        moments = law.moments()
        k = CumulantTable.tabulate(
            law.variables, lambda key: moments_to_cumulants(moments, key), n,
        )
        product_error = max(product_error, abs(
            product_cumulant(k, gamma, SetPartition.coarsest(n), labels)
            - law.grouped_cumulant(labels, gamma)
        ))
        inverse_error = max(inverse_error, abs(
            inverse_product_cumulant(
                gamma_cumulant_table(k, gamma, labels), gamma
            ) - k[labels]
        ))
    measured = max(round_trip, product_error, inverse_error)
    return Measurement(measured, 1e-12, details={
        'round_trip': round_trip,
        'product': product_error,
        'inverse': inverse_error,
    })
