"""
Django command to enumerate partitions and evaluate Möbius functions
"""

import json

from core.exceptions import InputError
from core.management.base import ComputationCommand, Output
from partitions.lattice import (
    SetPartition,
    bell_number,
    catalan_number,
    enumerate_noncrossing,
    enumerate_partitions,
    mobius_nc,
    mobius_partition_lattice,
)


def _partition(text):
    try:
        return SetPartition.from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f'not a JSON partition: {text!r}') from exc


class Command(ComputationCommand):
    """ partitions enumerate|mobius """
    help = 'Enumerate set partitions or evaluate a Möbius function'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=['enumerate', 'mobius'])
        parser.add_argument('--n', type=int, help='Ground set size')
        parser.add_argument(
            '--noncrossing', action='store_true',
            help='Use the lattice of non-crossing partitions',
        )
        parser.add_argument('--lower', help='Lower partition, e.g. [[1],[2]]')
        parser.add_argument('--upper', help='Upper partition, e.g. [[1,2]]')

    def compute(self, config, **options):
        if options['action'] == 'enumerate':
            n = options['n']
            if n is None:
                raise InputError('enumerate needs --n')
            if options['noncrossing']:
                partitions = enumerate_noncrossing(n)
                expected = catalan_number(n)
            else:
                partitions = enumerate_partitions(n)
                expected = bell_number(n)
            rows = [(str(p),) for p in partitions]
            return Output(
                {
                    'n': n,
                    'count': len(partitions),
                    'expected': expected,
                    'partitions': [p.to_json() for p in partitions],
                },
                header=('partition',),
                rows=rows,
            )

        if not options['lower'] or not options['upper']:
            raise InputError('mobius needs --lower and --upper')
        lower = _partition(options['lower'])
        upper = _partition(options['upper'])
        if options['noncrossing']:
            value = mobius_nc(lower, upper)
        else:
            value = mobius_partition_lattice(lower, upper)
        return Output(
            {
                'lower': lower.to_json(),
                'upper': upper.to_json(),
                'mobius': value,
            },
            header=('lower', 'upper', 'mobius'),
            rows=[(f'"{lower}"', f'"{upper}"', value)],
        )
