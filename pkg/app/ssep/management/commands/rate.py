"""
Django command for the large-deviation rate function I[n] of the open SSEP
"""

from core.management.base import (
    ComputationCommand,
    Output,
    add_profile_arguments,
    read_profile,
)
from scaling.solver import legendre_transform
from ssep.free_energy import FieldResponse, rate_function_ssep
from ssep.management.commands.free_energy import rate_options, solver_options


class Command(ComputationCommand):
    """ rate --n n.csv """
    help = 'Rate function of a density profile'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_profile_arguments(parser, 'n', 'Density profile n')
        parser.add_argument(
            '--legendre', action='store_true',
            help='Cross-check against the Legendre transform of F[h]',
        )
        parser.add_argument(
            '--knots', type=int, default=None,
            help='Search piecewise-linear h through this many knots '
                 '(default: every grid node)',
        )

    def compute(self, config, **options):
        n = read_profile(options, 'n', config)
        solution = rate_function_ssep(n, **rate_options(config))
        data = solution.to_json()
        data['I'] = data.pop('F')
        if options['legendre']:
            response = FieldResponse(**solver_options(config))
            data['I_legendre'] = legendre_transform(
                response,
                n,
                density=response.density,
                knots=options['knots'],
                starts=config['legendre_starts'],
                seed=config['seed'],
            )
        return Output(
            data,
            header=('x', 'n', 'g', 'q'),
            rows=list(zip(
                n.x.tolist(), n.values.tolist(),
                solution.g.values.tolist(), solution.q.values.tolist(),
            )),
        )
