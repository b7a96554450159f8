"""
Truncated power series in e_1..e_N.

CombinatorialSeries keeps exact coefficients per (e-exponents, multiset of
cumulant index sets); ExpansionSeries holds the numeric coefficients of the
e-monomials once cumulant values are substituted.
"""

from collections import defaultdict
from fractions import Fraction
import math

from core.exceptions import DomainError


def monomial_label(exponents):
    """ e1^3*e2^3 style label of an exponent vector """
    factors = []
    for site, power in enumerate(exponents, start=1):
        if power == 1:
            factors.append(f'e{site}')
        elif power:
            factors.append(f'e{site}^{power}')
    return '*'.join(factors) or '1'


def parse_monomial(label, N):
    exponents = [0] * N
    if label == '1':
        return tuple(exponents)
    for factor in label.split('*'):
        base, _, power = factor.partition('^')
        if not base.startswith('e'):
            raise DomainError(f'bad monomial factor {factor!r}')
        exponents[int(base[1:]) - 1] += int(power or 1)
    return tuple(exponents)


class CombinatorialSeries:
    """ Exact coefficients keyed by (exponents, sorted tuple of index sets) """

    def __init__(self, N, max_degree, terms=None):
        self.N = N
        self.max_degree = max_degree
        self.terms = {}
        for key, value in (terms or {}).items():
            self.add(key, value)

    def add(self, key, value):
        exponents, blocks = key
        if sum(exponents) > self.max_degree or value == 0:
            return
        key = (tuple(exponents), tuple(sorted(blocks)))
        total = self.terms.get(key, Fraction(0)) + value
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def coefficient(self, exponents, blocks):
        return self.terms.get(
            (tuple(exponents), tuple(sorted(tuple(b) for b in blocks))),
            Fraction(0),
        )

    def __eq__(self, other):
        return (
            isinstance(other, CombinatorialSeries)
            and self.N == other.N
            and self.terms == other.terms
        )

    def __add__(self, other):
        result = CombinatorialSeries(
            self.N, min(self.max_degree, other.max_degree)
        )
        for series in (self, other):
            for key, value in series.terms.items():
                result.add(key, value)
        return result

    def __mul__(self, other):
        degree = min(self.max_degree, other.max_degree)
        result = CombinatorialSeries(self.N, degree)
        for (e1, b1), v1 in self.terms.items():
            d1 = sum(e1)
            for (e2, b2), v2 in other.terms.items():
                if d1 + sum(e2) > degree:
                    continue
                result.add(
                    (tuple(a + b for a, b in zip(e1, e2)), b1 + b2), v1 * v2
                )
        return result

    def scaled(self, factor):
        return CombinatorialSeries(self.N, self.max_degree, {
            key: factor * value for key, value in self.terms.items()
        })

    def evaluate(self, table):
        """ Substitute cumulant values, summing per e-monomial """
        collected = defaultdict(list)
        for (exponents, blocks), coefficient in self.terms.items():
            value = float(coefficient)
            for block in blocks:
                value *= table[block]
            collected[exponents].append(value)
        return ExpansionSeries(self.N, self.max_degree, {
            exponents: math.fsum(values)
            for exponents, values in collected.items()
        })

    def to_json(self):
        return [
            {
                'monomial': monomial_label(exponents),
                'cumulants': [list(block) for block in blocks],
                'coefficient': str(value),
            }
            for (exponents, blocks), value in sorted(self.terms.items())
        ]


class ExpansionSeries:
    """ Numeric coefficients of e-monomials of total degree <= max_degree """

    def __init__(self, N, max_degree, terms=None):
        self.N = N
        self.max_degree = max_degree
        self.terms = {
            tuple(exponents): float(value)
            for exponents, value in (terms or {}).items()
            if sum(exponents) <= max_degree
        }

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), 0.0)

    def monomials(self):
        return sorted(self.terms)

    def __call__(self, e):
        """ Value of the truncated series at the point e """
        if len(e) != self.N:
            raise DomainError(f'expected {self.N} values of e, got {len(e)}')
        return math.fsum(
            value * math.prod(x ** k for x, k in zip(e, exponents))
            for exponents, value in self.terms.items()
        )

    def max_difference(self, other):
        keys = set(self.terms) | set(other.terms)
        return max(
            (abs(self.coefficient(k) - other.coefficient(k)) for k in keys),
            default=0.0,
        )

    def to_rows(self):
        return [
            (monomial_label(exponents), self.terms[exponents])
            for exponents in sorted(self.terms, key=lambda k: (sum(k), k))
        ]

    @classmethod
    def from_rows(cls, N, max_degree, rows):
        return cls(N, max_degree, {
            parse_monomial(label, N): float(value) for label, value in rows
        })

    def to_json(self):
        return {
            'N': self.N,
            'max_degree': self.max_degree,
            'terms': {label: value for label, value in self.to_rows()},
        }
