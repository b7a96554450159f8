"""
Tests for moment and cumulant tables
"""

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DomainError, IncompleteTableError
from cumulants.tables import CumulantTable, MomentTable, label_key


class LabelTableTests(SimpleTestCase):
    """ Test lookup, listing and parsing """

    def test_keys_are_multisets(self):
        table = MomentTable(2, values={(2, 1): 0.5})

        self.assertEqual(table[1, 2], 0.5)
        self.assertEqual(table[2, 1], 0.5)
        self.assertIn((1, 2), table)

    def test_single_label(self):
        table = CumulantTable(3, values={(2,): 0.25, (2, 2): 0.5})

        self.assertEqual(table[2], 0.25)
        self.assertEqual(table[2], table[(2,)])
        self.assertEqual(label_key(np.int64(3)), (3,))

    def test_missing_entry(self):
        table = CumulantTable(2, values={(1,): 0.5})

        with self.assertRaises(IncompleteTableError) as context:
            table[1, 1]

        self.assertEqual(context.exception.details['labels'], (1, 1))

    def test_labels_outside_range_rejected(self):
        with self.assertRaises(DomainError):
            MomentTable(2, values={(3,): 1.0})

    def test_from_json(self):
        table = MomentTable.from_json(
            {'n': 2, 'values': {'1': 0.5, '1,2': 0.25}}
        )

        self.assertEqual(table[1], 0.5)
        self.assertEqual(table.to_json(), {'1': 0.5, '1,2': 0.25})

    def test_malformed_json(self):
        with self.assertRaises(DomainError):
            MomentTable.from_json({'n': 2, 'values': {'a': 1}})
        with self.assertRaises(DomainError):
            MomentTable.from_json({'values': {}})

    def test_function_backed_table(self):
        table = MomentTable.from_function(1, lambda key: len(key))

        self.assertEqual(table[1, 1, 1], 3)
        self.assertFalse(table.exact)
        with self.assertRaises(DomainError):
            table.items()

    def test_tabulate_and_scale(self):
        table = CumulantTable.tabulate(2, lambda key: 1, 2)

        self.assertEqual(len(table.items()), 5)
        self.assertTrue(table.exact)
        self.assertEqual(table.scaled(3)[1, 2], 3)
        self.assertEqual((table + table)[2, 2], 2)
