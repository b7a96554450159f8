"""
Registry and runner for the acceptance suites.

Apps declare suites in a `suites` module with the `suite` decorator; a suite
takes a seed and returns a Measurement.
"""

from dataclasses import dataclass, field
import logging
import time

from django.utils.module_loading import autodiscover_modules

from core.exceptions import ComputationError

logger = logging.getLogger(__name__)

SUITE_ORDER = (
    'chromatic',
    'cumulants',
    'expansion',
    'covering',
    'free-cumulants',
    'f0',
    'equivalence',
    'rate',
    'chain',
)

_registry = {}


@dataclass
class Measurement:
    """ Largest observed deviation against its tolerance """
    measured: float
    tolerance: float
    passed: bool = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed is None:
            self.passed = bool(self.measured <= self.tolerance)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    seed: int
    elapsed: float
    details: dict = field(default_factory=dict)
    error: str = None

    def to_json(self):
        return {
            'suite': self.name,
            'passed': self.passed,
            'measured': self.measured,
            'tolerance': self.tolerance,
            'seed': self.seed,
            'elapsed': self.elapsed,
            'details': self.details,
            'error': self.error,
        }


def suite(name):
    """ Register a suite function under `name` """
    def register(func):
        _registry[name] = func
        return func
    return register


def available_suites():
    autodiscover_modules('suites')
    return [name for name in SUITE_ORDER if name in _registry]


def resolve(names):
    """ Expand 'all' and reject unknown names """
    known = available_suites()
    if 'all' in names:
        return known
    unknown = [name for name in names if name not in known]
    if unknown:
        raise ComputationError(
            f'unknown suites: {", ".join(unknown)}', known=known
        )
    return list(dict.fromkeys(names))


def run_suite(name, seed):
    autodiscover_modules('suites')
    started = time.perf_counter()
    try:
        result = _registry[name](seed)
    except ComputationError as exc:
        logger.warning('suite %s raised %s', name, exc)
        return SuiteResult(
            name=name, passed=False, measured=None, tolerance=None,
            seed=seed, elapsed=time.perf_counter() - started,
            error=f'{type(exc).__name__}: {exc}',
        )
    elapsed = time.perf_counter() - started
    logger.info(
        'suite %s: measured %.3e, tolerance %.1e, %.1fs',
        name, result.measured, result.tolerance, elapsed,
    )
    return SuiteResult(
        name=name, passed=result.passed, measured=float(result.measured),
        tolerance=float(result.tolerance), seed=seed, elapsed=elapsed,
        details=result.details,
    )


def run_suites(names, seed):
    return [run_suite(name, seed) for name in resolve(names)]
