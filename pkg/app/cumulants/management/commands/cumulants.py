"""
Django command for moment-cumulant conversions
"""

import json

from core.exceptions import InputError
from core.io import read_json
from core.management.base import ComputationCommand, Output
from cumulants.conversions import (
    cumulants_to_moments,
    free_cumulants_multilinear,
    gamma_cumulant_table,
    inverse_product_cumulant,
    moments_to_cumulants,
    reduced_product_cumulant,
)
from cumulants.tables import CumulantTable, MomentTable
from partitions.lattice import SetPartition


def _labels(text):
    try:
        labels = tuple(int(x) for x in text.split(','))
    except (AttributeError, ValueError) as exc:
        raise InputError(
            f'labels must be comma-separated integers: {text!r}'
        ) from exc
    return labels


def _partition(text, n):
    try:
        return SetPartition.from_json(json.loads(text), n)
    except json.JSONDecodeError as exc:
        raise InputError(f'not a JSON partition: {text!r}') from exc


class Command(ComputationCommand):
    """ cumulants to-cumulants|to-moments|free|product|inverse """
    help = 'Convert between moments, cumulants and free cumulants'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            'action',
            choices=[
                'to-cumulants', 'to-moments', 'free', 'product', 'inverse',
            ],
        )
        parser.add_argument('--table', required=True, help='Table JSON file')
        parser.add_argument('--labels', required=True, help='e.g. 1,2,2')
        parser.add_argument(
            '--gamma', help='Grouping partition, e.g. [[1,2],[3]]'
        )
        parser.add_argument(
            '--xi', help='Outer partition for product cumulants'
        )

    def compute(self, config, **options):
        action = options['action']
        labels = _labels(options['labels'])
        data = read_json(options['table'])
        if action in ('to-cumulants', 'free'):
            table = MomentTable.from_json(data)
        else:
            table = CumulantTable.from_json(data)

        if action == 'to-cumulants':
            value = moments_to_cumulants(table, labels)
        elif action == 'to-moments':
            value = cumulants_to_moments(table, labels)
        elif action == 'free':
            value = free_cumulants_multilinear(table, labels)
        else:
            if not options['gamma']:
                raise InputError(f'{action} needs --gamma')
            gamma = _partition(options['gamma'], len(labels))
            if action == 'product':
                xi = (
                    _partition(options['xi'], len(labels)) if options['xi']
                    else SetPartition.coarsest(len(labels))
                )
                value = reduced_product_cumulant(table, gamma, xi, labels)
            else:
                value = inverse_product_cumulant(
                    gamma_cumulant_table(table, gamma, labels), gamma
                )
        return Output(
            {'action': action, 'labels': list(labels), 'value': value},
            header=('action', 'labels', 'value'),
            rows=[(action, '"' + ','.join(map(str, labels)) + '"', value)],
        )
