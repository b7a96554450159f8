"""
Classical SSEP free energy: max over g of ∫ log(1 + g e) - log g' with
(1 + g e) g'' = g'^2 e, g(0) = 0, g(1) = 1, solved by shooting on g'(0)
"""

from dataclasses import dataclass
import logging

from django.conf import settings
import numpy as np
from scipy.integrate import cumulative_trapezoid, solve_ivp
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from core.exceptions import DomainError, SolverError
from scaling.grid import GridFunction

logger = logging.getLogger(__name__)

RTOL = 1e-11
ATOL = 1e-13
BRACKET_EXPANSIONS = 6
OVERSHOOT = 1e3


@dataclass
class ClassicalSolution:
    g: GridFunction
    g_prime: GridFunction
    slope: float
    F_value: float
    dense: object = None
    field: object = None

    def ode_residual(self, intervals=16384):
        """
        Sup norm of g'(x) - g'(0) - ∫_0^x g'^2 e / (1 + g e), the integrated
        Euler-Lagrange equation, on a fine grid
        """
        x = np.linspace(0.0, 1.0, intervals + 1)
        g, g_prime = self.dense(x)
        e = np.expm1(self.field(x))
        curvature = g_prime ** 2 * e / (1.0 + g * e)
        integrated = cumulative_trapezoid(curvature, x, initial=0.0)
        return float(np.max(np.abs(g_prime - self.slope - integrated)))

    def to_json(self):
        return {
            'F': self.F_value,
            'slope': self.slope,
            'x': self.g.x.tolist(),
            'g': self.g.values.tolist(),
        }


def _field(h):
    return CubicSpline(h.x, h.values)


def _integrate(field, slope, dense_output=False):
    def rhs(x, y):
        e = np.expm1(field(x))
        return [y[1], y[1] ** 2 * e / (1.0 + y[0] * e)]

    def degenerate(x, y):
        return 1.0 + y[0] * np.expm1(field(x)) - 1e-12

    degenerate.terminal = True

    def runaway(x, y):
        return OVERSHOOT * 1e3 - y[0]

    runaway.terminal = True

    return solve_ivp(
        rhs, (0.0, 1.0), [0.0, slope], method='DOP853',
        rtol=RTOL, atol=ATOL, events=(degenerate, runaway),
        dense_output=dense_output,
    )


def _endpoint_defect(field, slope):
    result = _integrate(field, slope)
    if result.status != 0 or result.t[-1] < 1.0:
        return OVERSHOOT
    return float(result.y[0, -1] - 1.0)


def _bracket(field, low, high):
    for _ in range(BRACKET_EXPANSIONS + 1):
        if _endpoint_defect(field, low) < 0 < _endpoint_defect(field, high):
            return low, high
        low, high = low / 10, high * 10
        logger.debug('expanding shooting bracket to [%g, %g]', low, high)
    raise SolverError(
        f'no sign change of g(1) - 1 for g\'(0) in [{low:g}, {high:g}]',
        bracket=(low, high),
    )


def classical_F_ssep(h, bracket=None):
    """ Shooting on g'(0) with brentq; returns a ClassicalSolution """
    low, high = bracket or settings.NUMERICS['SHOOTING_BRACKET']
    field = _field(h)
    low, high = _bracket(field, float(low), float(high))
    slope = brentq(
        lambda s: _endpoint_defect(field, s), low, high,
        xtol=1e-14, rtol=1e-14,
    )
    result = _integrate(field, slope, dense_output=True)
    if result.status != 0:
        raise SolverError(
            f'integration failed at g\'(0)={slope!r}: {result.message}'
        )
    g, g_prime = result.sol(h.x)
    if np.any(g_prime <= 0):
        raise DomainError('g\' is not positive on the shooting solution')
    e = np.expm1(h.values)
    F_value = GridFunction(np.log1p(g * e) - np.log(g_prime)).integral()
    logger.info('classical SSEP F[h] = %.12g (g\'(0) = %.12g)', F_value, slope)
    return ClassicalSolution(
        g=GridFunction(g), g_prime=GridFunction(g_prime), slope=float(slope),
        F_value=F_value, dense=result.sol, field=field,
    )
