"""
Test the expand management command
"""

from io import StringIO
import json
import math
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class ExpandCommandTests(SimpleTestCase):
    """ Test expansions of model files """

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.directory.name, 'model.json')

    def tearDown(self):
        self.directory.cleanup()

    def run_expand(self, model, *args):
        with open(self.path, 'w', encoding='utf-8') as stream:
            json.dump(model, stream)
        out = StringIO()
        call_command('expand', '--model', self.path, *args, stdout=out)
        return json.loads(out.getvalue())

    def test_single_site_series(self):
        """ Test log(1 + g e) = g e - g^2 e^2 / 2 + ... """
        data = self.run_expand(
            {'independent': [0.5]}, '--degree', '2', '--method', 'feynman'
        )

        self.assertEqual(data['method'], 'feynman')
        self.assertAlmostEqual(data['terms']['e1'], 0.5)
        self.assertAlmostEqual(data['terms']['e1^2'], -0.125)

    def test_evaluation_at_fields(self):
        data = self.run_expand(
            {'N': 2, 'probs': {'00': 0.4, '11': 0.6}},
            '--degree', '4', '--h', '0.01,0.02',
        )

        self.assertEqual(data['h'], [0.01, 0.02])
        self.assertAlmostEqual(data['W_series'], data['W_exact'], places=7)
        self.assertAlmostEqual(
            data['W_exact'], math.log(0.4 + 0.6 * math.exp(0.03))
        )

    def test_csv_output(self):
        with open(self.path, 'w', encoding='utf-8') as stream:
            json.dump({'independent': [0.5]}, stream)
        out = StringIO()

        call_command(
            'expand', '--model', self.path, '--degree', '1',
            '--format', 'csv', stdout=out,
        )

        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], 'monomial,coefficient')
        self.assertEqual(lines[1].split(',')[0], 'e1')

    def test_bad_field_list(self):
        with self.assertRaises(CommandError) as context:
            self.run_expand({'independent': [0.5]}, '--h', '0.1,x')

        self.assertEqual(context.exception.returncode, 2)

    def test_unnormalised_model(self):
        with self.assertRaises(CommandError) as context:
            self.run_expand({'N': 1, 'probs': {'0': 0.5, '1': 0.6}})

        self.assertIn('ModelError', str(context.exception))
