"""
Tables of joint moments and cumulants of commuting variables, keyed by
sorted label multisets
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Integral

from core.exceptions import DomainError, IncompleteTableError


def label_key(labels):
    """ Sorted label tuple; a single integer label stands for (label,) """
    if isinstance(labels, Integral):
        labels = (labels,)
    key = tuple(sorted(int(x) for x in labels))
    if not key:
        raise DomainError('empty label multiset')
    return key


class LabelTable:
    """
    Values on nonempty label multisets over 1..n. Either explicit values
    or a function of the sorted label tuple.
    """
    kind = 'value'

    def __init__(self, n, values=None, function=None):
        if (values is None) == (function is None):
            raise DomainError('give exactly one of values or function')
        self.n = n
        self.function = function
        self.values = None
        if values is not None:
            self.values = {label_key(k): v for k, v in values.items()}
            for key in self.values:
                if key[0] < 1 or key[-1] > n:
                    raise DomainError(f'labels {key} outside 1..{n}')

    @classmethod
    def from_json(cls, data):
        """ {"n": 2, "values": {"1": 0.5, "1,2": 0.25}} """
        try:
            return cls(int(data['n']), values={
                tuple(int(x) for x in key.split(',')): float(value)
                for key, value in data['values'].items()
            })
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise DomainError(f'malformed {cls.kind} table: {exc}') from exc

    @classmethod
    def from_function(cls, n, function):
        return cls(n, function=function)

    @classmethod
    def tabulate(cls, n, function, max_size):
        """ Explicit table of every multiset up to max_size labels """
        return cls(n, values={
            key: function(key)
            for size in range(1, max_size + 1)
            for key in combinations_with_replacement(range(1, n + 1), size)
        })

    @property
    def exact(self):
        return self.values is not None and all(
            isinstance(v, (int, Fraction)) for v in self.values.values()
        )

    def __getitem__(self, labels):
        key = label_key(labels)
        if self.function is not None:
            return self.function(key)
        try:
            return self.values[key]
        except KeyError as exc:
            raise IncompleteTableError(
                f'no {self.kind} for labels {key}', labels=key
            ) from exc

    def __contains__(self, labels):
        if self.function is not None:
            return True
        return label_key(labels) in self.values

    def items(self):
        if self.values is None:
            raise DomainError('a function-backed table cannot be listed')
        return sorted(self.values.items())

    def to_json(self):
        return {
            ','.join(str(x) for x in key): value
            for key, value in self.items()
        }

    def scaled(self, factor):
        return type(self)(
            self.n, values={k: factor * v for k, v in self.items()}
        )

    def __add__(self, other):
        keys = set(self.values) | set(other.values)
        return type(self)(self.n, values={
            k: self.values.get(k, 0) + other.values.get(k, 0) for k in keys
        })


class MomentTable(LabelTable):
    """ φ(a_{i_1} ... a_{i_k}) """
    kind = 'moment'


class CumulantTable(LabelTable):
    """ K_k(a_{i_1}, ..., a_{i_k}) """
    kind = 'cumulant'
