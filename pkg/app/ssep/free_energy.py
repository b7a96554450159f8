"""
Free energy and large deviations of the open SSEP through the closed
free-probability form of F0
"""

import logging

from django.conf import settings
import numpy as np
from scipy.linalg import LinAlgError, solve_banded

from core.exceptions import DomainError, IterationLimitError, SolverError
from freeprob.transforms import b_from_a, solve_z
from scaling.grid import GridFunction
from scaling.solver import (
    VariationalSolution,
    check_rate_profile,
    rate_q,
    relative_entropy,
    solve_variational,
)

logger = logging.getLogger(__name__)

MIN_STEP = 2.0 ** -40
ARMIJO = 1e-4


class SsepFreeEnergy:
    """
    F0[q] = ∫ log(z - ℓ) - z + 1 with ℓ(x) = -∫_x^1 q and
    ∫ dx/(z - ℓ) = 1. Its gradient is g(x) = ∫_0^x dy/(z - ℓ(y)) and
    `auxiliary` returns z.
    """

    def __init__(self):
        self._last = None

    def _solve(self, q):
        key = q.values.tobytes()
        if self._last is not None and self._last[0] == key:
            return self._last[1], self._last[2]
        ell = b_from_a(q)
        z = solve_z(ell, 1.0)
        self._last = (key, ell, z)
        return ell, z

    def value(self, q):
        ell, z = self._solve(q)
        return (z - ell).apply(np.log).integral() - z + 1.0

    def gradient(self, q):
        ell, z = self._solve(q)
        return (1.0 / (z - ell)).cumulative()

    def auxiliary(self, q):
        return self._solve(q)[1]


def F0_ssep(a):
    """ 𝔉0[a] = ∫ log(z - b) - z + 1, b = -∫_x^1 a, G_b(z) = 1 """
    return SsepFreeEnergy().value(a)


def F_ssep_free(h, **options):
    """ Scaled log-generating function of the densities at field h """
    e = h.apply(np.expm1)
    solution = solve_variational(e, SsepFreeEnergy(), **options)
    logger.info(
        'free SSEP F[h] = %.12g (z = %.12g)', solution.F_value, solution.z
    )
    return solution


class FieldResponse:
    """
    h ↦ F[h] and h ↦ δF/δh = n_h from one variational solve per field,
    the pair `legendre_transform` needs
    """

    def __init__(self, **options):
        self.options = options
        self._last = None

    def solution(self, h):
        key = h.values.tobytes()
        if self._last is None or self._last[0] != key:
            self._last = (key, F_ssep_free(h, **self.options))
        return self._last[1]

    def __call__(self, h):
        return self.solution(h).F_value

    def density(self, h):
        return density_profile(self.solution(h), h)


def _midpoints(values):
    return 0.5 * (values[:-1] + values[1:])


class MonotoneRateObjective:
    """
    J[g] = ∫ n log(n/g) + (1-n) log((1-n)/(1-g)) + log g' over increasing
    g with g(0) = 0 and g(1) = 1, every term sampled at cell midpoints so
    the pinned end values never enter a logarithm
    """

    def __init__(self, n):
        self.step = n.step
        self.n_mid = _midpoints(n.values)

    def value(self, g):
        delta = np.diff(g)
        entropy = relative_entropy(self.n_mid, _midpoints(g))
        return float(self.step * np.sum(np.log(delta / self.step) + entropy))

    def derivatives(self, g):
        """ Gradient and banded Hessian in the interior node values """
        step, n = self.step, self.n_mid
        delta = np.diff(g)
        g_mid = _midpoints(g)
        slope = (1.0 - n) / (1.0 - g_mid) - n / g_mid
        curvature = n / g_mid ** 2 + (1.0 - n) / (1.0 - g_mid) ** 2
        inverse = step / delta
        inverse_squared = step / delta ** 2

        gradient = (
            inverse[:-1] - inverse[1:] + 0.5 * step * (slope[:-1] + slope[1:])
        )
        hessian = np.zeros((3, gradient.size))
        hessian[1] = (
            0.25 * step * (curvature[:-1] + curvature[1:])
            - inverse_squared[:-1] - inverse_squared[1:]
        )
        coupling = inverse_squared[1:-1] + 0.25 * step * curvature[1:-1]
        hessian[0, 1:] = coupling
        hessian[2, :-1] = coupling
        return gradient, hessian


def _ascent_direction(gradient, hessian):
    """ Newton step, or scaled gradient where Newton does not ascend """
    try:
        direction = solve_banded((1, 1), -hessian, gradient)
    except (LinAlgError, ValueError):
        return gradient / np.abs(hessian[1])
    if not np.all(np.isfinite(direction)) or direction @ gradient <= 0:
        return gradient / np.abs(hessian[1])
    return direction


def _line_search(objective, g, value, direction, gradient):
    """ Halve the step until g stays increasing and J rises enough """
    slope = float(direction @ gradient)
    rounding = 1e-14 * max(1.0, abs(value))
    step = 1.0
    while step >= MIN_STEP:
        trial = g.copy()
        trial[1:-1] += step * direction
        if np.all(np.diff(trial) > 0):
            trial_value = objective.value(trial)
            if trial_value - value >= ARMIJO * step * slope - rounding:
                return trial, trial_value
        step /= 2
    raise SolverError(
        'rate-function line search stalled', value=value, slope=slope,
    )


def maximise_rate(n, tolerance, max_iterations):
    """ Damped Newton ascent of J from g(x) = x """
    objective = MonotoneRateObjective(n)
    g = n.x.copy()
    value = objective.value(g)
    history = []
    for count in range(1, max_iterations + 1):
        gradient, hessian = objective.derivatives(g)
        residual = float(np.max(np.abs(gradient))) / objective.step
        history.append(residual)
        if residual < tolerance:
            return g, value, count, history
        direction = _ascent_direction(gradient, hessian)
        g, value = _line_search(objective, g, value, direction, gradient)
        logger.debug('rate Newton %d: J=%.15g residual=%.3e',
                     count, value, residual)
    raise IterationLimitError(
        f'rate-function solve did not converge in {max_iterations} '
        f'iterations (residual {history[-1]:.3e})',
        residual=history[-1],
        iterations=max_iterations,
    )


def rate_function_ssep(n, tolerance=None, max_iterations=None):
    """
    Large-deviation rate I[n] of a density profile.

    At the fixed point ∫ qg - F0(q) = ∫ log g', so I[n] is the maximum of
    `MonotoneRateObjective`; q = n/g - (1-n)/(1-g) and z = 1/g'(1) are
    read off the maximiser.
    """
    n = check_rate_profile(n)
    if tolerance is None:
        tolerance = settings.NUMERICS['FIXED_POINT_TOLERANCE']
    if max_iterations is None:
        max_iterations = settings.NUMERICS['MAX_ITERATIONS']
    g, value, count, history = maximise_rate(n, tolerance, max_iterations)
    logger.info(
        'SSEP rate I[n] = %.12g after %d Newton steps', value, count
    )
    return VariationalSolution(
        g=GridFunction(g),
        q=GridFunction(rate_q(n.values, g)),
        F_value=value,
        iterations=count,
        residual=history[-1],
        residual_history=history,
        z=float(n.step / (g[-1] - g[-2])),
    )


def density_profile(solution, h):
    """ Most likely density under field h: n = g e^h / (1 + g e) """
    e = h.apply(np.expm1)
    denominator = 1.0 + (e * solution.g).values
    if np.any(denominator <= 0):
        raise DomainError('1 + e g is not positive')
    return GridFunction(solution.g.values * np.exp(h.values) / denominator)


def steady_profile(intervals):
    """ Mean density x of the unperturbed chain """
    return GridFunction.from_callable(lambda x: x, intervals)
