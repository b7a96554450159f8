"""
Tests for the run configuration
"""

import json
import os
import tempfile

from django.test import SimpleTestCase, override_settings
from django.conf import settings

from core.config import build_run_config, default_config
from core.exceptions import ConfigError, InputError


class RunConfigTests(SimpleTestCase):
    """ Test defaults, config files and flag overrides """

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def write_config(self, data):
        path = os.path.join(self.directory.name, 'config.json')
        with open(path, 'w', encoding='utf-8') as stream:
            json.dump(data, stream)
        return path

    def test_defaults(self):
        config = build_run_config()

        self.assertEqual(config['grid_size'], 256)
        self.assertEqual(config['damping'], 0.5)
        self.assertEqual(config['seed'], 7)
        self.assertEqual(config['shooting_bracket'], (1e-6, 1e3))

    @override_settings(NUMERICS={**settings.NUMERICS, 'GRID_SIZE': 64})
    def test_defaults_follow_settings(self):
        self.assertEqual(default_config()['grid_size'], 64)

    def test_file_then_flags(self):
        path = self.write_config({'grid_size': 128, 'seed': 3})

        config = build_run_config({'seed': 11, 'damping': None}, path)

        self.assertEqual(config['grid_size'], 128)
        self.assertEqual(config['seed'], 11)
        self.assertEqual(config['damping'], 0.5)

    def test_unknown_setting(self):
        path = self.write_config({'grid': 128})

        with self.assertRaises(ConfigError) as context:
            build_run_config(config_path=path)

        self.assertIn('grid', context.exception.errors)

    def test_invalid_value(self):
        with self.assertRaises(ConfigError) as context:
            build_run_config({'grid_size': 4})

        self.assertIn('grid_size', context.exception.errors)

    def test_bad_bracket(self):
        path = self.write_config({'shooting_bracket': [2.0, 1.0]})

        with self.assertRaises(ConfigError):
            build_run_config(config_path=path)

    def test_config_must_be_an_object(self):
        path = self.write_config([1, 2])

        with self.assertRaises(ConfigError):
            build_run_config(config_path=path)

    def test_missing_file(self):
        with self.assertRaises(InputError):
            build_run_config(config_path='/nonexistent/config.json')
