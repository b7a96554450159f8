"""
Free-energy functionals F0(q) consumed by the variational solvers.

A functional exposes `value(q)` and `gradient(q)`; it may also expose
`auxiliary(q)`, a scalar the solvers report alongside the solution.
"""

from typing import Protocol

from scaling.grid import GridFunction
from scaling.kernels import F0_eval, F0_gradient


class FreeEnergyFunctional(Protocol):

    def value(self, q: GridFunction) -> float:
        ...

    def gradient(self, q: GridFunction) -> GridFunction:
        ...


class KernelFreeEnergy:
    """ Series truncated at n_max over a kernel set """

    def __init__(self, kernels, n_max):
        self.kernels = kernels
        self.n_max = n_max

    def value(self, q):
        return F0_eval(self.kernels, q, self.n_max)

    def gradient(self, q):
        return F0_gradient(self.kernels, q, self.n_max)


class IndependentFreeEnergy:
    """ Independent sites: F0(q) = ∫ q g0, constant gradient g0 """

    def __init__(self, g0):
        self.g0 = g0

    def _profile(self, q):
        if isinstance(self.g0, GridFunction):
            return self.g0
        return GridFunction.constant(self.g0, q.intervals)

    def value(self, q):
        return (q * self._profile(q)).integral()

    def gradient(self, q):
        return self._profile(q)
