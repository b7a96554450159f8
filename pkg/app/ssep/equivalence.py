"""
Cross-check of the free-probability and classical SSEP free energies
"""

from dataclasses import dataclass, field
import logging

from django.conf import settings
import numpy as np

from core.exceptions import ComputationError, SolverError
from freeprob.transforms import b_from_a
from ssep.classical import classical_F_ssep
from ssep.free_energy import F_ssep_free

logger = logging.getLogger(__name__)

ZERO_FREE_ENERGY = 1e-12
NUMERIC_FAILURES = (ValueError, ArithmeticError, RuntimeError)


@dataclass
class EquivalenceEntry:
    label: str
    F_free: float = None
    F_classical: float = None
    slope_residual: float = None
    integral_residual: float = None
    error: str = None

    @property
    def difference(self):
        if self.F_free is None or self.F_classical is None:
            return None
        return abs(self.F_free - self.F_classical)

    @property
    def relative_difference(self):
        """ |ΔF| / |F|, the absolute difference where F vanishes """
        if self.difference is None:
            return None
        if abs(self.F_classical) < ZERO_FREE_ENERGY:
            return self.difference
        return self.difference / abs(self.F_classical)

    def to_json(self):
        return {
            'label': self.label,
            'F_free': self.F_free,
            'F_classical': self.F_classical,
            'difference': self.difference,
            'slope_residual': self.slope_residual,
            'integral_residual': self.integral_residual,
            'error': self.error,
        }


@dataclass
class EquivalenceReport:
    tolerance: float
    identity_tolerance: float
    entries: list = field(default_factory=list)

    @property
    def passed(self):
        return all(
            entry.error is None
            and entry.relative_difference < self.tolerance
            and entry.slope_residual < self.identity_tolerance
            and entry.integral_residual < self.identity_tolerance
            for entry in self.entries
        )

    def to_json(self):
        return {
            'tolerance': self.tolerance,
            'identity_tolerance': self.identity_tolerance,
            'passed': self.passed,
            'entries': [entry.to_json() for entry in self.entries],
        }


def bridging_residuals(solution):
    """
    Sup over intervals of |g'(z - ℓ) - 1|, with g' the difference quotient
    and 1/(z - ℓ) averaged over the interval, and |∫ q g - (1 - z)|
    """
    ell = b_from_a(solution.q).values
    z = solution.z
    inverse = 1.0 / (z - ell)
    slopes = np.diff(solution.g.values) / solution.g.step
    averaged = (inverse[1:] + inverse[:-1]) / 2
    slope_residual = float(np.max(np.abs(slopes / averaged - 1.0)))
    integral_residual = abs((solution.q * solution.g).integral() - (1.0 - z))
    return slope_residual, integral_residual


def equivalence_report(h_profiles, tolerance=1e-4, identity_tolerance=None):
    """
    Run both solvers on each labelled profile; failures are recorded on
    the entry and do not stop the report
    """
    if identity_tolerance is None:
        identity_tolerance = settings.NUMERICS['IDENTITY_TOLERANCE']
    report = EquivalenceReport(tolerance, identity_tolerance)
    for label, h in h_profiles:
        entry = EquivalenceEntry(label)
        try:
            solution = F_ssep_free(h)
            entry.F_free = solution.F_value
            entry.slope_residual, entry.integral_residual = \
                bridging_residuals(solution)
            entry.F_classical = classical_F_ssep(h).F_value
        except ComputationError as exc:
            logger.warning('equivalence check failed for %s: %s', label, exc)
            entry.error = f'{type(exc).__name__}: {exc}'
        except NUMERIC_FAILURES as exc:
            failure = SolverError(f'{type(exc).__name__}: {exc}')
            logger.warning(
                'equivalence check failed for %s: %s', label, failure
            )
            entry.error = f'SolverError: {failure}'
        report.entries.append(entry)
    return report
