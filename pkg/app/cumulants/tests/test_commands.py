"""
Test the cumulants management command
"""

from io import StringIO
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class CumulantsCommandTests(SimpleTestCase):
    """ Test conversions from the command line """

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.table = os.path.join(self.directory.name, 'table.json')
        with open(self.table, 'w', encoding='utf-8') as stream:
            json.dump({'n': 1, 'values': {
                '1': 0.5, '1,1': 0.5, '1,1,1': 0.5, '1,1,1,1': 0.5,
            }}, stream)

    def tearDown(self):
        self.directory.cleanup()

    def run_command(self, *args):
        out = StringIO()
        call_command('cumulants', *args, '--table', self.table, stdout=out)
        return json.loads(out.getvalue())

    def test_to_cumulants(self):
        """ Test the variance of a fair Bernoulli variable """
        data = self.run_command('to-cumulants', '--labels', '1,1')

        self.assertAlmostEqual(data['value'], 0.25)

    def test_free(self):
        data = self.run_command('free', '--labels', '1,1,1')

        self.assertAlmostEqual(data['value'], 0.0)

    def test_product(self):
        """ Test the cumulant of the single product X X is K_11 + K_1^2 """
        data = self.run_command(
            'product', '--labels', '1,1', '--gamma', '[[1,2]]'
        )

        self.assertAlmostEqual(data['value'], 0.75)

    def test_product_needs_gamma(self):
        with self.assertRaises(CommandError) as context:
            self.run_command('product', '--labels', '1,1')

        self.assertIn('needs --gamma', str(context.exception))

    def test_bad_labels(self):
        with self.assertRaises(CommandError) as context:
            self.run_command('to-cumulants', '--labels', '1,x')

        self.assertEqual(context.exception.returncode, 2)
