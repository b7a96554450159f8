"""
Exact integer polynomials in one variable z
"""

from dataclasses import dataclass

from core.exceptions import DomainError


@dataclass(frozen=True)
class IntPolynomial:
    """ Polynomial with exact integer coefficients indexed by degree """
    coefficients: tuple = ()

    def __post_init__(self):
        values = []
        for c in self.coefficients:
            if int(c) != c:
                raise DomainError(f'non-integer coefficient {c!r}')
            values.append(int(c))
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, 'coefficients', tuple(values))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls((0,) * degree + (c,))

    @classmethod
    def falling_factorial(cls, n):
        """ z(z-1)...(z-n+1), the chromatic polynomial of K_n """
        result = cls.constant(1)
        for k in range(n):
            result = result * cls((-k, 1))
        return result

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def coefficient(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __call__(self, z):
        value = 0
        for c in reversed(self.coefficients):
            value = value * z + c
        return value

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(
            self.coefficient(k) + other.coefficient(k) for k in range(size)
        ))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def divide_by_z(self):
        """ Exact division by z """
        if self.coefficient(0) != 0:
            raise DomainError(f'{self} is not divisible by z')
        return IntPolynomial(self.coefficients[1:])

    def __str__(self):
        if not self.coefficients:
            return '0'
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            size = abs(c)
            body = {0: '', 1: 'z'}.get(k, f'z^{k}')
            if size != 1 or k == 0:
                body = f'{size}{body}'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text
