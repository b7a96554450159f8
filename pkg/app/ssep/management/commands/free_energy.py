"""
Django command for the scaled free energy F[h] of the open SSEP
"""

import numpy as np

from core.management.base import (
    ComputationCommand,
    Output,
    add_profile_arguments,
    read_profile,
)
from scaling.functionals import KernelFreeEnergy
from scaling.solver import (
    probe_initialisation,
    solve_block_variational,
    solve_variational,
)
from ssep.classical import classical_F_ssep
from ssep.free_energy import SsepFreeEnergy
from ssep.kernels import ssep_kernel_set


def solver_options(config):
    return {
        'tolerance': config['fixed_point_tolerance'],
        'max_iterations': config['max_iterations'],
        'damping': config['damping'],
    }


def rate_options(config):
    return {
        'tolerance': config['fixed_point_tolerance'],
        'max_iterations': config['max_iterations'],
    }


class Command(ComputationCommand):
    """ free_energy --h h.csv --kernels ssep """
    help = 'Solve the variational problem for F[h]'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_profile_arguments(parser, 'h', 'Field h')
        parser.add_argument(
            '--kernels', choices=['ssep', 'series'], default='ssep',
            help='Closed-form F0 or its cumulant series truncated at --n-max',
        )
        parser.add_argument(
            '--classical', action='store_true',
            help='Also solve the classical boundary-value problem',
        )
        method = parser.add_mutually_exclusive_group()
        method.add_argument(
            '--blocks', type=int,
            help='Extremize over step functions on this many blocks',
        )
        method.add_argument(
            '--starts', type=int,
            help='Re-solve from perturbed starts and report the F spread',
        )

    def compute(self, config, **options):
        h = read_profile(options, 'h', config)
        if options['kernels'] == 'series':
            n_max = config['n_max']
            F0 = KernelFreeEnergy(ssep_kernel_set(n_max), n_max)
        else:
            F0 = SsepFreeEnergy()
        e = h.apply(np.expm1)
        if options['blocks']:
            solution = solve_block_variational(
                e, F0, options['blocks'], **solver_options(config)
            )
        elif options['starts']:
            solution = probe_initialisation(
                e, F0, options['starts'], seed=config['seed'],
                spread_tolerance=config['stationarity_tolerance'],
                **solver_options(config),
            )
            if solution.spread > config['stationarity_tolerance']:
                self.stderr.write(self.style.WARNING(
                    f'F differs by {solution.spread:.3e} between starts'
                ))
        else:
            solution = solve_variational(e, F0, **solver_options(config))
        data = solution.to_json()
        data['kernels'] = options['kernels']
        if options['classical']:
            data['F_classical'] = classical_F_ssep(
                h, config['shooting_bracket']
            ).F_value
        return Output(
            data,
            header=('x', 'g', 'q'),
            rows=list(zip(
                solution.g.x.tolist(),
                solution.g.values.tolist(),
                solution.q.values.tolist(),
            )),
        )
