"""
Base class for the computational management commands
"""

from dataclasses import dataclass, field
import logging

from django.core.management.base import BaseCommand, CommandError

from core.config import CONFIG_FIELDS, add_config_arguments, build_run_config
from core.exceptions import ComputationError, InputError
from core.io import render_json, write_csv, write_json
from scaling.grid import GridFunction

logger = logging.getLogger(__name__)


@dataclass
class Output:
    """ A command result: JSON data and, optionally, a CSV table """
    data: object
    header: tuple = None
    rows: list = field(default_factory=list)


class ComputationCommand(BaseCommand):
    """
    Assembles the run configuration, calls `compute` and writes its Output
    to --out (atomically) or to stdout. Domain errors leave with their
    exit code.
    """

    def add_arguments(self, parser):
        add_config_arguments(parser)
        parser.add_argument('--out', help='Output file (stdout if omitted)')

    def compute(self, config, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = build_run_config(
                {key: options.get(key) for key in CONFIG_FIELDS},
                options.get('config_path'),
            )
            output = self.compute(config, **options)
            if output is not None:
                self.emit(output, config, options.get('out'))
        except ComputationError as exc:
            logger.debug('command failed', exc_info=True)
            raise CommandError(
                f'{type(exc).__name__}: {exc}', returncode=exc.exit_code
            ) from exc

    def emit(self, output, config, path):
        as_csv = config['output_format'] == 'csv' and output.header
        if path is None:
            if as_csv:
                self.stdout.write(','.join(output.header))
                for row in output.rows:
                    self.stdout.write(','.join(str(value) for value in row))
            else:
                self.stdout.write(render_json(output.data))
            return
        if as_csv:
            write_csv(path, output.header, output.rows)
        else:
            write_json(path, output.data)
        self.stdout.write(self.style.SUCCESS(f'Wrote {path}'))


def add_profile_arguments(parser, name, help_text):
    """ --NAME file.csv or --NAME-constant value """
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        f'--{name}', dest=name, help=f'{help_text} (x,value CSV)'
    )
    group.add_argument(
        f'--{name}-constant', dest=f'{name}_constant', type=float,
        help=f'Constant {help_text.lower()}',
    )


def read_profile(options, name, config, default=None):
    """ GridFunction from the --NAME options, on the configured grid """
    if options.get(name):
        return GridFunction.from_csv(options[name])
    constant = options.get(f'{name}_constant')
    if constant is None:
        constant = default
    if constant is None:
        raise InputError(f'give --{name} or --{name}-constant')
    return GridFunction.constant(constant, config['grid_size'])
