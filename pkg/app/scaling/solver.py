"""
Fixed-point solvers for the variational free energy and rate function,
and the numerical Legendre transform
"""

from dataclasses import dataclass, field
import logging

from django.conf import settings
import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import minimize
from scipy.special import xlogy

from core.exceptions import DomainError, IterationLimitError
from scaling.grid import GridFunction

logger = logging.getLogger(__name__)

MIN_DAMPING = 2.0 ** -12
PROFILE_SLACK = 1e-9


@dataclass
class VariationalSolution:
    g: GridFunction
    q: GridFunction
    F_value: float
    iterations: int
    residual: float
    residual_history: list = field(default_factory=list)
    z: float = None
    spread: float = None

    def to_json(self):
        data = {
            'F': self.F_value,
            'iterations': self.iterations,
            'residual': self.residual,
            'residual_history': list(self.residual_history),
            'x': self.g.x.tolist(),
            'g': self.g.values.tolist(),
            'q': self.q.values.tolist(),
        }
        if self.z is not None:
            data['z'] = self.z
        if self.spread is not None:
            data['spread'] = self.spread
        return data


def _numerics(key, value):
    return settings.NUMERICS[key] if value is None else value


def _auxiliary(F0, q):
    auxiliary = getattr(F0, 'auxiliary', None)
    return None if auxiliary is None else auxiliary(q)


def variational_objective(e, F0, g, q):
    """ ∫(log(1+eg) - qg) + F0(q) """
    entropy = (e * g).apply(np.log1p).integral()
    return entropy - (q * g).integral() + F0.value(q)


class _DampedIteration:
    """ Damping that halves whenever the residual grows """

    def __init__(self, damping, tolerance, max_iterations, label):
        self.damping = damping
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self.label = label
        self.history = []

    def record(self, residual):
        if self.history and residual > self.history[-1]:
            self.damping = max(self.damping / 2, MIN_DAMPING)
            logger.debug(
                '%s: residual grew to %.3e, damping now %g',
                self.label, residual, self.damping,
            )
        self.history.append(residual)
        return residual < self.tolerance

    def fail(self):
        residual = self.history[-1] if self.history else None
        raise IterationLimitError(
            f'{self.label} did not converge in {self.max_iterations} '
            f'iterations (residual {residual:.3e})',
            residual=residual,
            iterations=self.max_iterations,
        )


def solve_variational(
    e, F0, tolerance=None, max_iterations=None, damping=None, initial_g=None,
):
    """
    Solve q = e/(1+eg), g = δF0/δq by damped alternating iteration and
    return the extremal value ∫(log(1+eg) - qg) + F0(q)
    """
    iteration = _DampedIteration(
        _numerics('DAMPING', damping),
        _numerics('FIXED_POINT_TOLERANCE', tolerance),
        _numerics('MAX_ITERATIONS', max_iterations),
        'variational solve',
    )
    q = GridFunction.constant(0.0, e.intervals)
    gradient = F0.gradient(q)
    g = gradient if initial_g is None else initial_g

    for count in range(1, iteration.max_iterations + 1):
        denominator = 1.0 + e.values * g.values
        bad = int(np.sum(denominator <= 0))
        if bad:
            raise DomainError(f'1 + e g is not positive at {bad} nodes')
        q_target = e / GridFunction(denominator)
        residual = max(
            (q - q_target).sup_norm(),
            (g - gradient).sup_norm(),
        )
        if iteration.record(residual):
            F_value = variational_objective(e, F0, g, q)
            logger.info(
                'variational solve converged in %d iterations, F=%.12g',
                count, F_value,
            )
            return VariationalSolution(
                g=g, q=q, F_value=F_value, iterations=count,
                residual=residual, residual_history=iteration.history,
                z=_auxiliary(F0, q),
            )
        q = q + iteration.damping * (q_target - q)
        gradient = F0.gradient(q)
        g = g + iteration.damping * (gradient - g)
    iteration.fail()


def probe_initialisation(e, F0, starts=3, seed=None, spread_tolerance=None,
                         **options):
    """
    Re-solve from perturbed initial g and record the largest spread of F
    over the starts on the first solution; a spread above
    `spread_tolerance` is logged as sensitivity to the initial point
    """
    spread_tolerance = _numerics('STATIONARITY_TOLERANCE', spread_tolerance)
    rng = np.random.default_rng(_numerics('SEED', seed))
    solution = solve_variational(e, F0, **options)
    start = F0.gradient(GridFunction.constant(0.0, e.intervals))
    values = [solution.F_value]
    for _ in range(starts - 1):
        modes = rng.uniform(-0.1, 0.1, size=3)
        bump = sum(
            c * np.sin((k + 1) * np.pi * e.x) for k, c in enumerate(modes)
        )
        other = solve_variational(
            e, F0, initial_g=start * (1.0 + bump), **options
        )
        values.append(other.F_value)
    solution.spread = float(max(values) - min(values))
    if solution.spread > spread_tolerance:
        logger.warning(
            'variational solve depends on its initial point: F spread %.3e '
            'over %d starts', solution.spread, starts,
        )
    return solution


def _block_labels(intervals, blocks):
    if blocks < 1 or intervals % blocks:
        raise DomainError(
            f'{blocks} blocks do not divide a grid of {intervals} intervals'
        )
    labels = np.minimum(
        (np.arange(intervals + 1) * blocks) // intervals, blocks - 1
    )
    return labels


def _block_average(values, intervals, blocks):
    per_block = intervals // blocks
    averages = np.empty(blocks)
    for b in range(blocks):
        chunk = values[b * per_block:(b + 1) * per_block + 1]
        averages[b] = trapezoid(chunk, dx=1.0 / intervals) * blocks
    return averages


def solve_block_variational(
    e, F0, blocks=8, tolerance=None, max_iterations=None, damping=None,
):
    """
    Extremize over step functions: e and q constant on `blocks` equal
    blocks, g_B the block average of δF0/δq
    """
    intervals = e.intervals
    labels = _block_labels(intervals, blocks)
    e_blocks = _block_average(e.values, intervals, blocks)
    iteration = _DampedIteration(
        _numerics('DAMPING', damping),
        _numerics('FIXED_POINT_TOLERANCE', tolerance),
        _numerics('MAX_ITERATIONS', max_iterations),
        'block variational solve',
    )
    q_blocks = np.zeros(blocks)
    g_blocks = _block_average(
        F0.gradient(GridFunction(q_blocks[labels])).values, intervals, blocks
    )
    gradient_blocks = g_blocks

    for count in range(1, iteration.max_iterations + 1):
        denominator = 1.0 + e_blocks * g_blocks
        if np.any(denominator <= 0):
            raise DomainError('1 + e g is not positive on some block')
        q_target = e_blocks / denominator
        residual = float(max(
            np.max(np.abs(q_blocks - q_target)),
            np.max(np.abs(g_blocks - gradient_blocks)),
        ))
        if iteration.record(residual):
            q = GridFunction(q_blocks[labels])
            F_value = float(
                np.sum(np.log1p(e_blocks * g_blocks) - q_blocks * g_blocks)
                / blocks + F0.value(q)
            )
            return VariationalSolution(
                g=GridFunction(g_blocks[labels]), q=q, F_value=F_value,
                iterations=count, residual=residual,
                residual_history=iteration.history, z=_auxiliary(F0, q),
            )
        q_blocks = q_blocks + iteration.damping * (q_target - q_blocks)
        gradient_blocks = _block_average(
            F0.gradient(GridFunction(q_blocks[labels])).values,
            intervals, blocks,
        )
        g_blocks = g_blocks + iteration.damping * (gradient_blocks - g_blocks)
    iteration.fail()


def _fill_edges(values, valid):
    """ Replace invalid end nodes by linear extrapolation from the interior """
    values = np.array(values, dtype=float)
    inside = np.flatnonzero(valid)
    if inside.size < 2:
        raise DomainError('profile has fewer than two admissible nodes')
    first, last = inside[0], inside[-1]
    if np.any(~valid[first:last + 1]):
        raise DomainError('profile leaves (0, 1) away from the endpoints')
    left = values[inside[1]] - values[inside[0]]
    for j in range(first):
        values[j] = values[first] - (first - j) * left
    right = values[inside[-1]] - values[inside[-2]]
    for j in range(last + 1, values.size):
        values[j] = values[last] + (j - last) * right
    return values


def rate_q(n, g):
    """ q = n/g - (1-n)/(1-g) wherever both lie strictly inside (0, 1) """
    valid = (g > 0) & (g < 1) & (n > 0) & (n < 1)
    with np.errstate(divide='ignore', invalid='ignore'):
        q = np.where(valid, n / g - (1.0 - n) / (1.0 - g), 0.0)
    return _fill_edges(q, valid)


def relative_entropy(n, g):
    """ n log(n/g) + (1-n) log((1-n)/(1-g)), with 0 log 0 = 0 """
    with np.errstate(divide='ignore', invalid='ignore'):
        return (
            xlogy(n, n) - xlogy(n, g)
            + xlogy(1.0 - n, 1.0 - n) - xlogy(1.0 - n, 1.0 - g)
        )


def rate_integrand(n, g, q):
    """ n log(n/g) + (1-n) log((1-n)/(1-g)) + qg, endpoints extrapolated """
    values = relative_entropy(n, g) + q * g
    return _fill_edges(values, np.isfinite(values))


def check_rate_profile(n, slack=PROFILE_SLACK):
    """
    The profile clipped to [0, 1]; values up to `slack` outside are
    rounding, anything further is a domain error
    """
    if np.any(n.values < -slack) or np.any(n.values > 1 + slack):
        raise DomainError('density profile must lie in [0, 1]')
    n = n.apply(lambda values: np.clip(values, 0.0, 1.0))
    interior = n.values[1:-1]
    if np.any(interior <= 0) or np.any(interior >= 1):
        raise DomainError(
            'density profile must lie in (0, 1) at interior nodes'
        )
    return n


def solve_rate_function(
    n, F0, tolerance=None, max_iterations=None, damping=None,
):
    """
    Rate function max over g, q of ∫[n log(n/g) + (1-n) log((1-n)/(1-g))
    + qg] - F0(q) at the fixed point g = δF0/δq, q = n/g - (1-n)/(1-g)
    """
    n = check_rate_profile(n)
    iteration = _DampedIteration(
        _numerics('DAMPING', damping),
        _numerics('FIXED_POINT_TOLERANCE', tolerance),
        _numerics('MAX_ITERATIONS', max_iterations),
        'rate-function solve',
    )
    q = GridFunction.constant(0.0, n.intervals)
    for count in range(1, iteration.max_iterations + 1):
        g = F0.gradient(q)
        q_target = GridFunction(rate_q(n.values, g.values))
        residual = (q_target - q).sup_norm()
        if iteration.record(residual):
            integrand = GridFunction(
                rate_integrand(n.values, g.values, q.values)
            )
            value = integrand.integral() - F0.value(q)
            logger.info(
                'rate function converged in %d iterations, I=%.12g',
                count, value,
            )
            return VariationalSolution(
                g=g, q=q, F_value=value, iterations=count, residual=residual,
                residual_history=iteration.history, z=_auxiliary(F0, q),
            )
        q = q + iteration.damping * (q_target - q)
    iteration.fail()


def _field_basis(x, knots):
    """ Node values of h as a linear map of its parameters """
    if knots is None:
        return np.eye(x.size)
    knot_x = np.linspace(0.0, 1.0, knots)
    return np.column_stack([
        np.interp(x, knot_x, unit) for unit in np.eye(knots)
    ])


def _trapezoid_weights(intervals):
    weights = np.full(intervals + 1, 1.0 / intervals)
    weights[[0, -1]] /= 2
    return weights


def legendre_transform(
    F, n, density=None, knots=None, starts=None, seed=None, bound=5.0,
):
    """
    sup over h of ∫ h n - F[h] by L-BFGS-B from several seeded starts.

    h is free at every node, or piecewise linear through `knots` equally
    spaced values. With `density(h)` = δF/δh the gradient n - density(h)
    is analytic; without it L-BFGS-B differences F.
    """
    starts = _numerics('LEGENDRE_STARTS', starts)
    rng = np.random.default_rng(_numerics('SEED', seed))
    basis = _field_basis(n.x, knots)
    weights = _trapezoid_weights(n.intervals)
    size = basis.shape[1]

    def objective(parameters):
        h = GridFunction(basis @ parameters)
        value = (h * n).integral() - F(h)
        if density is None:
            return -value
        gradient = weights * (n.values - density(h).values)
        return -value, -(basis.T @ gradient)

    best = None
    for start in range(starts):
        initial = (
            np.zeros(size) if start == 0
            else rng.uniform(-1.0, 1.0, size=size)
        )
        result = minimize(
            objective, initial, jac=density is not None, method='L-BFGS-B',
            bounds=[(-bound, bound)] * size,
            options={'ftol': 1e-14, 'gtol': 1e-10, 'maxiter': 1000},
        )
        if not result.success:
            logger.warning(
                'Legendre start %d stopped early: %s (value %.6g)',
                start, result.message, -result.fun,
            )
        if best is None or result.fun < best.fun:
            best = result
    logger.info('Legendre transform value %.10g', -best.fun)
    return float(-best.fun)
