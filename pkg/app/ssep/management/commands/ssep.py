"""
Django command for the SSEP: correlations, F0, rate, equivalence check,
exact chain and simulation
"""

from django.core.management.base import CommandError

from core.exceptions import InputError
from core.management.base import (
    ComputationCommand,
    Output,
    add_profile_arguments,
    read_profile,
)
from ssep.chain import (
    connected_two_point,
    exact_steady_state,
    mean_profile,
    simulate_ssep,
)
from ssep.equivalence import equivalence_report
from ssep.free_energy import F0_ssep, rate_function_ssep
from ssep.kernels import psi_sharp, psi_ssep
from ssep.management.commands.free_energy import rate_options
from ssep.suites import EQUIVALENCE_INTERVALS, standard_profiles


def _points(text):
    try:
        return [float(x) for x in text.split(',')]
    except (AttributeError, ValueError) as exc:
        raise InputError(
            f'points must be comma-separated numbers: {text!r}'
        ) from exc


class Command(ComputationCommand):
    """ ssep psi|f0|rate|verify|simulate|exact """
    help = 'SSEP correlations, free energies and chain statistics'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            'action',
            choices=['psi', 'f0', 'rate', 'verify', 'simulate', 'exact'],
        )
        parser.add_argument('--points', help='e.g. 0.2,0.4,0.6')
        parser.add_argument(
            '--sharp', action='store_true',
            help='Evaluate ψ# at the points in the given order',
        )
        add_profile_arguments(parser, 'a', 'Source a for F0')
        add_profile_arguments(parser, 'n', 'Density profile n')
        parser.add_argument('--sites', type=int, default=6)
        parser.add_argument('--t-max', dest='t_max', type=float, default=1e5)

    def compute(self, config, **options):
        handler = getattr(self, '_' + options['action'])
        return handler(config, options)

    def _psi(self, config, options):
        if not options['points']:
            raise InputError('psi needs --points')
        points = _points(options['points'])
        value = psi_sharp(points) if options['sharp'] else psi_ssep(points)
        return Output(
            {'points': points, 'sharp': options['sharp'], 'value': value},
            header=('n', 'value'), rows=[(len(points), value)],
        )

    def _f0(self, config, options):
        a = read_profile(options, 'a', config)
        value = F0_ssep(a)
        return Output({'F0': value}, header=('F0',), rows=[(value,)])

    def _rate(self, config, options):
        n = read_profile(options, 'n', config)
        solution = rate_function_ssep(n, **rate_options(config))
        return Output(
            {'I': solution.F_value, 'iterations': solution.iterations},
            header=('I',), rows=[(solution.F_value,)],
        )

    def _verify(self, config, options):
        report = equivalence_report(
            standard_profiles(
                max(config['grid_size'], EQUIVALENCE_INTERVALS)
            ),
            identity_tolerance=config['identity_tolerance'],
        )
        for entry in report.entries:
            style = self.style.SUCCESS
            if entry.error is not None:
                style = self.style.ERROR
            self.stderr.write(style(
                f'{entry.label}: free={entry.F_free} '
                f'classical={entry.F_classical} error={entry.error}'
            ))
        if not report.passed:
            raise CommandError('equivalence check failed', returncode=1)
        return Output(report.to_json())

    def _simulate(self, config, options):
        stats = simulate_ssep(
            options['sites'], options['t_max'], config['seed']
        )
        if stats.short_run:
            self.stderr.write(self.style.WARNING(
                'Run is short for reliable standard errors'
            ))
        return Output(
            stats.to_json(),
            header=('site', 'mean', 'standard_error'),
            rows=[
                (i, m, s) for i, (m, s) in enumerate(
                    zip(stats.means.tolist(), stats.standard_errors.tolist()),
                    start=1,
                )
            ],
        )

    def _exact(self, config, options):
        N = options['sites']
        pi = exact_steady_state(N)
        means = mean_profile(pi, N)
        return Output(
            {
                'N': N,
                'means': means.tolist(),
                'two_point': connected_two_point(pi, N).tolist(),
            },
            header=('site', 'mean'),
            rows=list(enumerate(means.tolist(), start=1)),
        )
