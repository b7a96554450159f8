"""
Cumulant kernels ψ_n and the truncated series

    F0(q) = Σ_n 1/n! ∫ q(s_1)...q(s_n) ψ_n(s_1, ..., s_n) ds

evaluated by tensor-product trapezoid quadrature.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from core.exceptions import DomainError, IncompleteTableError, SizeLimitError
from scaling.grid import GridFunction

MAX_ORDER = 6
TENSOR_INTERVALS = {2: 256, 3: 48, 4: 16, 5: 10, 6: 6}


def trapezoid_weights(intervals):
    weights = np.full(intervals + 1, 1.0 / intervals)
    weights[[0, -1]] *= 0.5
    return weights


@dataclass(frozen=True)
class CumulantKernelSet:
    """
    Symmetric kernels by order. Each entry is a vectorised callable
    ψ_n(x_1, ..., x_n) or a symmetric array sampled on a uniform grid of
    [0, 1]^n.
    """
    psi: dict
    intervals: dict = field(default_factory=dict)

    def __post_init__(self):
        for n, kernel in self.psi.items():
            if callable(kernel):
                continue
            tensor = np.asarray(kernel, dtype=float)
            if tensor.ndim != n or len(set(tensor.shape)) != 1:
                raise DomainError(
                    f'kernel of order {n} has shape {tensor.shape}'
                )
            for axes in _transpositions(n):
                if not np.allclose(tensor, np.transpose(tensor, axes)):
                    raise DomainError(f'kernel of order {n} is not symmetric')

    @property
    def orders(self):
        return sorted(self.psi)

    def _kernel(self, n):
        try:
            return self.psi[n]
        except KeyError as exc:
            raise IncompleteTableError(
                f'no kernel of order {n}', order=n
            ) from exc

    def intervals_for(self, n, fine):
        """ Grid the order-n term is integrated on """
        kernel = self._kernel(n)
        if not callable(kernel):
            return np.asarray(kernel).shape[0] - 1
        if n == 1:
            return fine
        return min(fine, self.intervals.get(n, TENSOR_INTERVALS.get(n, 6)))

    def sample(self, n, intervals):
        """ ψ_n on the full tensor mesh of the given grid """
        kernel = self._kernel(n)
        if not callable(kernel):
            return np.asarray(kernel, dtype=float)
        x = np.linspace(0.0, 1.0, intervals + 1)
        mesh = np.meshgrid(*([x] * n), indexing='ij')
        return np.broadcast_to(
            np.asarray(kernel(*mesh), dtype=float), mesh[0].shape
        )


def _transpositions(n):
    for k in range(n - 1):
        axes = list(range(n))
        axes[k], axes[k + 1] = axes[k + 1], axes[k]
        yield axes


def _check_order(kernels, n_max):
    if n_max > MAX_ORDER:
        raise SizeLimitError(
            f'tensor quadrature is capped at order {MAX_ORDER}, got {n_max}',
            limit=MAX_ORDER,
        )
    missing = [n for n in range(1, n_max + 1) if n not in kernels.psi]
    if missing:
        raise IncompleteTableError(f'missing kernels of order {missing}')


def _weighted_profile(q, intervals):
    coarse = q if intervals == q.intervals else q.resample(intervals)
    return trapezoid_weights(intervals) * coarse.values


def F0_eval(kernels, q, n_max):
    """ Truncated series value through order n_max """
    _check_order(kernels, n_max)
    total = 0.0
    for n in range(1, n_max + 1):
        intervals = kernels.intervals_for(n, q.intervals)
        weighted = _weighted_profile(q, intervals)
        term = kernels.sample(n, intervals)
        for _ in range(n):
            term = term @ weighted
        total += float(term) / math.factorial(n)
    return total


def F0_gradient(kernels, q, n_max):
    """ δF0/δq by term-wise differentiation, on the grid of q """
    _check_order(kernels, n_max)
    gradient = np.zeros(len(q))
    for n in range(1, n_max + 1):
        intervals = kernels.intervals_for(n, q.intervals)
        weighted = _weighted_profile(q, intervals)
        term = kernels.sample(n, intervals)
        for _ in range(n - 1):
            term = term @ weighted
        term = term / math.factorial(n - 1)
        if intervals != q.intervals:
            term = np.interp(q.x, np.linspace(0.0, 1.0, intervals + 1), term)
        gradient += term
    return GridFunction(gradient)
