"""
Real functions on [0, 1] sampled at the uniform nodes x_j = j/M
"""

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid

from core.exceptions import DomainError, InputError
from core.io import read_csv

MIN_INTERVALS = 16


class GridFunction:
    """ Node values of a function on [0, 1], trapezoid quadrature """
    __slots__ = ('values',)

    def __init__(self, values):
        values = np.array(values, dtype=float)
        if values.ndim != 1 or values.size < MIN_INTERVALS + 1:
            raise DomainError(
                f'a grid function needs at least {MIN_INTERVALS + 1} nodes, '
                f'got shape {values.shape}'
            )
        if not np.all(np.isfinite(values)):
            raise DomainError('grid function values must be finite')
        values.setflags(write=False)
        self.values = values

    @classmethod
    def constant(cls, c, intervals):
        return cls(np.full(intervals + 1, float(c)))

    @classmethod
    def from_callable(cls, func, intervals):
        """ Sample a vectorised callable at the nodes """
        x = np.linspace(0.0, 1.0, intervals + 1)
        return cls(np.broadcast_to(func(x), x.shape))

    @classmethod
    def from_rows(cls, rows, path=None):
        """ Build from (x, value) rows on uniform nodes """
        if len(rows) < MIN_INTERVALS + 1:
            raise InputError(
                f'{len(rows)} rows, need at least {MIN_INTERVALS + 1}',
                path=path,
            )
        x = np.array([row[0] for row in rows])
        expected = np.linspace(0.0, 1.0, len(rows))
        if not np.allclose(x, expected, atol=1e-9):
            raise InputError('x column is not the uniform grid j/M', path=path)
        return cls([row[1] for row in rows])

    @classmethod
    def from_csv(cls, path):
        return cls.from_rows(read_csv(path, ('x', 'value')), path)

    def to_rows(self):
        return list(zip(self.x.tolist(), self.values.tolist()))

    @property
    def intervals(self):
        return self.values.size - 1

    @property
    def step(self):
        return 1.0 / self.intervals

    @property
    def x(self):
        return np.linspace(0.0, 1.0, self.values.size)

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return f'GridFunction(M={self.intervals})'

    def integral(self):
        return float(trapezoid(self.values, dx=self.step))

    def cumulative(self):
        """ x ↦ ∫_0^x f """
        return GridFunction(
            cumulative_trapezoid(self.values, dx=self.step, initial=0.0)
        )

    def tail(self):
        """ x ↦ ∫_x^1 f """
        head = self.cumulative().values
        return GridFunction(head[-1] - head)

    def apply(self, func):
        return GridFunction(func(self.values))

    def sup_norm(self):
        return float(np.max(np.abs(self.values)))

    def resample(self, intervals):
        """ Linear interpolation onto a grid with `intervals` intervals """
        target = np.linspace(0.0, 1.0, intervals + 1)
        return GridFunction(np.interp(target, self.x, self.values))

    def _operand(self, other):
        if isinstance(other, GridFunction):
            if other.values.size != self.values.size:
                raise DomainError(
                    f'grid sizes differ: {self.intervals} != {other.intervals}'
                )
            return other.values
        return other

    def __add__(self, other):
        return GridFunction(self.values + self._operand(other))

    __radd__ = __add__

    def __sub__(self, other):
        return GridFunction(self.values - self._operand(other))

    def __rsub__(self, other):
        return GridFunction(self._operand(other) - self.values)

    def __mul__(self, other):
        return GridFunction(self.values * self._operand(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return GridFunction(self.values / self._operand(other))

    def __rtruediv__(self, other):
        return GridFunction(self._operand(other) / self.values)

    def __neg__(self):
        return GridFunction(-self.values)
