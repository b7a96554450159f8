"""
Acceptance suites for free cumulants, F0, the equivalence of the two
formulations, the rate function and the finite chain
"""

import math

import numpy as np

from core.exceptions import ComputationError
from core.verification import Measurement, suite
from freeprob.transforms import free_cumulants_from_moments, moments_of_b
from scaling.functionals import IndependentFreeEnergy
from scaling.grid import GridFunction
from scaling.solver import (
    legendre_transform,
    rate_integrand,
    solve_rate_function,
)
from ssep.chain import (
    connected_two_point,
    exact_steady_state,
    mean_profile,
    simulate_ssep,
    two_point_reference,
)
from ssep.equivalence import equivalence_report
from ssep.free_energy import (
    F0_ssep,
    F_ssep_free,
    FieldResponse,
    density_profile,
    rate_function_ssep,
    steady_profile,
)
from ssep.kernels import psi_functional, psi_sharp

EQUIVALENCE_INTERVALS = 512
# I[1/2] in the continuum: the maximiser is g = sin^2(pi x / 2)
FLAT_PROFILE_RATE = math.log(math.pi / 2)


def standard_profiles(intervals):
    """ Labelled fields of the equivalence check """
    return [
        ('0', GridFunction.constant(0.0, intervals)),
        ('0.5', GridFunction.constant(0.5, intervals)),
        ('1', GridFunction.constant(1.0, intervals)),
        ('x(1-x)', GridFunction.from_callable(
            lambda x: x * (1 - x), intervals
        )),
        ('sin(pi x)', GridFunction.from_callable(
            lambda x: np.sin(np.pi * x), intervals
        )),
    ]


def closed_form_cumulants(m):
    """ R_2..R_4 in terms of the moments m_1..m_4 """
    m1, m2, m3, m4 = (m[p] for p in range(1, 5))
    return [
        m2 - m1 ** 2,
        m3 - 3 * m2 * m1 + 2 * m1 ** 3,
        m4 - 4 * m3 * m1 + 10 * m2 * m1 ** 2 - 2 * m2 ** 2 - 5 * m1 ** 4,
    ]


def ordered_sharp_formulas(x1, x2, x3, x4):
    """ ψ# at ordered points x1 < x2 < x3 < x4 """
    common = x1 * (1 - 3 * x2 - 2 * x3 + 5 * x2 * x3) * (1 - x4)
    return {
        (0, 1): x1 * (1 - x2),
        (0, 1, 2): x1 * (1 - 2 * x2) * (1 - x3),
        (0, 1, 2, 3): common,
        (0, 2, 3, 1): common,
        (0, 2, 1, 3): x1 * (1 - 4 * x2 - x3 + 5 * x2 * x3) * (1 - x4),
    }


@suite('free-cumulants')
def free_cumulants_suite(seed):
    rng = np.random.default_rng(seed)
    moment_error = 0.0
    for _ in range(10):
        b = GridFunction(rng.uniform(-1.0, 1.0, size=65))
        m = moments_of_b(b, 4)
        computed = free_cumulants_from_moments(m, 4)[1:]
        moment_error = max(moment_error, max(
            abs(c - e) for c, e in zip(computed, closed_form_cumulants(m))
        ))

    sharp_error = 0.0
    for _ in range(50):
        points = np.sort(rng.uniform(0.0, 1.0, size=4))
        for order, expected in ordered_sharp_formulas(*points).items():
            value = psi_sharp([points[k] for k in order])
            sharp_error = max(sharp_error, abs(value - expected))

    x = (0.1, 0.25, 0.55, 0.8)
    pattern = (
        abs(psi_sharp(x) - psi_sharp((x[0], x[2], x[3], x[1]))) < 1e-14
        and abs(psi_sharp(x) - psi_sharp((x[0], x[2], x[1], x[3]))) > 1e-3
    )
    return Measurement(
        max(moment_error / 1e-10, sharp_error / 1e-12), 1.0,
        passed=moment_error < 1e-10 and sharp_error < 1e-12 and pattern,
        details={
            'closed_forms': moment_error,
            'ordered_sharp': sharp_error,
            'order_dependence': pattern,
        },
    )


def truncation_slope(a, orders=5):
    """ Fitted exponent of |F0[v a] - Σ_(n<=orders) v^n ψ_n[a]/n!| in v """
    terms = [
        psi_functional(a, n) / math.factorial(n)
        for n in range(1, orders + 1)
    ]
    vs = np.linspace(0.05, 0.3, 6)
    residuals = [
        abs(F0_ssep(a * v) - sum(
            t * v ** n for n, t in enumerate(terms, start=1)
        ))
        for v in vs
    ]
    return float(np.polyfit(np.log(vs), np.log(residuals), 1)[0])


@suite('f0')
def f0_suite(seed):
    intervals = 256
    sources = {
        'constant': GridFunction.constant(2.0, intervals),
        'sinusoidal': GridFunction.from_callable(
            lambda x: 2.0 + np.sin(2 * np.pi * x), intervals
        ),
    }
    slopes = {name: truncation_slope(a) for name, a in sources.items()}
    worst = min(slopes.values())
    return Measurement(
        -worst, -5.5, passed=worst >= 5.5, details={'slopes': slopes},
    )


@suite('equivalence')
def equivalence_suite(seed):
    profiles = standard_profiles(EQUIVALENCE_INTERVALS)
    report = equivalence_report(profiles[1:])
    zero = F_ssep_free(profiles[0][1])
    x = zero.g.x
    zero_error = max(
        abs(zero.F_value), float(np.max(np.abs(zero.g.values - x)))
    )
    differences = [
        entry.relative_difference for entry in report.entries
        if entry.relative_difference is not None
    ]
    if not differences:
        raise ComputationError(
            'no field reached both formulations',
            errors=[entry.error for entry in report.entries],
        )
    measured = max(differences)
    return Measurement(
        measured, report.tolerance,
        passed=report.passed and zero_error < 1e-8,
        details={'report': report.to_json(), 'zero_field': zero_error},
    )


def random_profile(rng, intervals):
    """ x plus a few small sine modes, inside (0, 1) at interior nodes """
    amplitudes = rng.uniform(-0.05, 0.05, size=3)
    return GridFunction.from_callable(
        lambda x: x + sum(
            c * np.sin((k + 1) * np.pi * x) for k, c in enumerate(amplitudes)
        ),
        intervals,
    )


def duality_fields(intervals):
    return [
        GridFunction.constant(0.3, intervals),
        GridFunction.constant(-0.5, intervals),
        GridFunction.constant(0.8, intervals),
        GridFunction.from_callable(lambda x: x - 0.5, intervals),
        GridFunction.from_callable(
            lambda x: 0.5 * np.sin(np.pi * x), intervals
        ),
    ]


@suite('rate')
def rate_suite(seed):
    rng = np.random.default_rng(seed)
    intervals = 128
    at_mean = abs(rate_function_ssep(steady_profile(intervals)).F_value)
    lowest = min(
        rate_function_ssep(random_profile(rng, intervals)).F_value
        for _ in range(50)
    )
    flat = abs(
        rate_function_ssep(GridFunction.constant(0.5, 256)).F_value
        - FLAT_PROFILE_RATE
    )

    duality = 0.0
    for h in duality_fields(2 * intervals):
        solution = F_ssep_free(h)
        n = density_profile(solution, h)
        rate = rate_function_ssep(n).F_value
        gap = solution.F_value + rate - (h * n).integral()
        duality = max(duality, abs(gap))

    h = duality_fields(2 * intervals)[-1]
    response = FieldResponse()
    n = response.density(h)
    transform = legendre_transform(
        response, n, density=response.density, starts=1, seed=seed,
    )
    legendre = abs(transform - rate_function_ssep(n).F_value)

    n = GridFunction.from_callable(
        lambda x: 0.5 + 0.2 * np.sin(2 * np.pi * x), intervals
    )
    g0 = GridFunction.constant(0.3, intervals)
    independent = solve_rate_function(n, IndependentFreeEnergy(0.3)).F_value
    pointwise = GridFunction(
        rate_integrand(n.values, g0.values, np.zeros(n.values.size))
    ).integral()
    degeneration = abs(independent - pointwise)

    passed = (
        at_mean < 1e-8 and lowest >= -1e-10 and flat < 1e-2
        and duality < 1e-4 and legendre < 1e-4 and degeneration < 1e-10
    )
    return Measurement(
        max(duality, legendre), 1e-4, passed=passed,
        details={
            'rate_at_mean': at_mean,
            'lowest_random_rate': lowest,
            'flat_profile_error': flat,
            'legendre_duality': duality,
            'legendre_transform_gap': legendre,
            'independent_degeneration': degeneration,
        },
    )


@suite('chain')
def chain_suite(seed):
    N = 8
    pi = exact_steady_state(N)
    means = mean_profile(pi, N)
    linear = np.arange(1, N + 1) / (N + 1)
    monotone = bool(np.all(np.diff(means) > 0))
    profile_error = float(np.max(np.abs(means - linear)))

    correlations = connected_two_point(pi, N)
    reference = two_point_reference(N)
    upper = np.triu_indices(N, k=1)
    negative = bool(np.all(correlations[upper] < 0))
    relative = float(np.max(np.abs(
        correlations[upper] / reference[upper] - 1.0
    )))

    stats = simulate_ssep(6, 1e6, seed)
    exact_means = mean_profile(exact_steady_state(6), 6)
    sigmas = float(np.max(
        np.abs(stats.means - exact_means) / stats.standard_errors
    ))

    passed = (
        monotone and profile_error < 1e-10 and negative
        and relative < 0.3 and sigmas < 3.0
    )
    return Measurement(
        sigmas, 3.0, passed=passed,
        details={
            'monotone': monotone,
            'linear_profile_error': profile_error,
            'two_point_negative': negative,
            'two_point_relative_error': relative,
            'simulation_sigmas': sigmas,
        },
    )
