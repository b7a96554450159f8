"""
Assembly of the run configuration: flags override the --config file,
which overrides the project defaults in settings.NUMERICS
"""

import logging

from django.conf import settings

from core.exceptions import ConfigError
from core.io import read_json
from core.serializers import RunConfigSerializer

logger = logging.getLogger(__name__)

CONFIG_FIELDS = tuple(RunConfigSerializer().fields)


def default_config():
    return {key.lower(): value for key, value in settings.NUMERICS.items()}


def build_run_config(overrides=None, config_path=None):
    """ Validated RunConfig dict; unknown or invalid keys raise ConfigError """
    merged = default_config()
    merged['shooting_bracket'] = list(merged['shooting_bracket'])
    if config_path:
        from_file = read_json(config_path)
        if not isinstance(from_file, dict):
            raise ConfigError(f'{config_path}: expected a JSON object')
        unknown = sorted(set(from_file) - set(CONFIG_FIELDS))
        if unknown:
            raise ConfigError(
                f'{config_path}: unknown settings {", ".join(unknown)}',
                errors={key: ['Unknown setting.'] for key in unknown},
            )
        merged.update(from_file)
    for key, value in (overrides or {}).items():
        if key in CONFIG_FIELDS and value is not None:
            merged[key] = value

    serializer = RunConfigSerializer(data=merged)
    if not serializer.is_valid():
        fields = ', '.join(sorted(serializer.errors))
        raise ConfigError(
            f'invalid configuration: {fields}', errors=serializer.errors
        )
    config = dict(serializer.validated_data)
    logger.debug('run configuration %s', config)
    return config


def add_config_arguments(parser):
    """ Common --config and numerical override flags for commands """
    parser.add_argument(
        '--config', dest='config_path', help='JSON settings file'
    )
    parser.add_argument('--grid-size', dest='grid_size', type=int)
    parser.add_argument(
        '--tolerance', dest='fixed_point_tolerance', type=float
    )
    parser.add_argument('--max-iterations', dest='max_iterations', type=int)
    parser.add_argument('--damping', type=float)
    parser.add_argument('--n-max', dest='n_max', type=int)
    parser.add_argument('--seed', type=int)
    parser.add_argument(
        '--format', dest='output_format', choices=['json', 'csv'],
    )
