"""
Django command to expand log Z of a Bernoulli model in e_i = exp(h_i) - 1
"""

import math

from core.exceptions import InputError
from core.io import read_json
from core.management.base import ComputationCommand, Output
from bernoulli.expansions import (
    feynman_expansion_W,
    graph_expansion_W,
    taylor_oracle_W,
)
from bernoulli.model import (
    BernoulliModel,
    exact_log_partition,
    noncoincident_cumulants,
)

METHODS = {
    'chromatic': graph_expansion_W,
    'feynman': feynman_expansion_W,
    'taylor': taylor_oracle_W,
}


class Command(ComputationCommand):
    """ expand --model model.json --degree 4 --method chromatic """
    help = 'Truncated expansion of W = log Z from non-coincident cumulants'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--model', required=True, help='Model JSON file')
        parser.add_argument('--degree', type=int, default=4)
        parser.add_argument(
            '--method', choices=sorted(METHODS), default='chromatic',
        )
        parser.add_argument(
            '--h', help='Comma-separated fields h_i to evaluate W at',
        )

    def compute(self, config, **options):
        model = BernoulliModel.from_json(read_json(options['model']))
        table = noncoincident_cumulants(model)
        e = None
        if options['h']:
            try:
                h = [float(x) for x in options['h'].split(',')]
            except ValueError as exc:
                raise InputError(f'bad --h value: {exc}') from exc
            e = [math.expm1(x) for x in h]
        series = METHODS[options['method']](table, e, options['degree'])

        data = series.to_json()
        data['method'] = options['method']
        if e is not None:
            data['h'] = h
            data['W_series'] = series.value
            data['W_exact'] = exact_log_partition(model, h)
        if options.get('out'):
            self.stdout.write(
                f'{len(series.terms)} monomials'
                f' up to degree {options["degree"]}'
            )
        return Output(
            data,
            header=('monomial', 'coefficient'),
            rows=series.to_rows(),
        )
