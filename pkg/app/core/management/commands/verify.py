"""
Django command to run the acceptance suites
"""

from django.core.management.base import CommandError

from core.management.base import ComputationCommand, Output
from core.models import VerificationRun
from core.verification import SUITE_ORDER, run_suites


def _format(value, pattern):
    return '-' if value is None else format(value, pattern)


class Command(ComputationCommand):
    """ verify [--suite NAME ...] [--record] """
    help = 'Run acceptance suites and report pass/fail'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--suite', dest='suites', action='append',
            choices=('all',) + SUITE_ORDER,
            help='Suite to run (repeatable, default all)',
        )
        parser.add_argument(
            '--record', action='store_true',
            help='Save the results as VerificationRun rows',
        )

    def compute(self, config, **options):
        names = options['suites'] or ['all']
        results = run_suites(names, config['seed'])

        self.stderr.write(f'{"suite":<16}{"measured":>12}{"tolerance":>12}')
        for result in results:
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            line = (
                f'{result.name:<16}'
                f'{_format(result.measured, ".3e"):>12}'
                f'{_format(result.tolerance, ".1e"):>12}'
            )
            verdict = 'ok' if result.passed else 'FAIL'
            self.stderr.write(style(f'{line}  {verdict}'))
            if result.error:
                self.stderr.write(self.style.ERROR(f'  {result.error}'))

        if options['record']:
            for result in results:
                VerificationRun.record(result)

        self.emit(
            Output(
                [result.to_json() for result in results],
                header=('suite', 'passed', 'measured', 'tolerance', 'elapsed'),
                rows=[
                    (r.name, r.passed, r.measured, r.tolerance, r.elapsed)
                    for r in results
                ],
            ),
            config, options.get('out'),
        )
        failed = [result.name for result in results if not result.passed]
        if failed:
            raise CommandError(
                f'failed suites: {", ".join(failed)}', returncode=1
            )
