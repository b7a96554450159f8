"""
Single-variable free probability for functions b on [0, 1]: power
moments, free cumulants, the resolvent G(z) = ∫ dx/(z - b(x)) and its
functional inverse
"""

from dataclasses import dataclass
import logging

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import brentq

from core.exceptions import (
    BranchError,
    DomainError,
    EdgeError,
    SizeLimitError,
    SolverError,
)

logger = logging.getLogger(__name__)

MAX_MOMENT_ORDER = 12
EDGE_FLOOR = 1e-14
RTOL = 1e-15


@dataclass(frozen=True)
class MomentSequence:
    """ Power moments m_1..m_P of b; m_0 = 1 is implicit """
    moments: tuple

    @property
    def order(self):
        return len(self.moments)

    def __getitem__(self, p):
        if p == 0:
            return 1.0
        return self.moments[p - 1]

    def padded(self):
        """ (1, m_1, ..., m_P) """
        return np.concatenate(([1.0], np.asarray(self.moments, dtype=float)))


def b_from_a(a):
    """ b(x) = -∫_x^1 a(y) dy """
    return -a.tail()


def moments_of_b(b, P_max):
    if P_max > MAX_MOMENT_ORDER:
        raise SizeLimitError(
            f'moments are capped at order {MAX_MOMENT_ORDER}, got {P_max}',
            limit=MAX_MOMENT_ORDER,
        )
    return MomentSequence(tuple(
        b.apply(lambda values, p=p: values ** p).integral()
        for p in range(1, P_max + 1)
    ))


def free_cumulants_from_moments(m, n_max):
    """
    R_1..R_n_max from m_n = Σ_s R_s [x^(n-s)] M(x)^s with
    M(x) = Σ_k m_k x^k, solved order by order
    """
    if n_max > m.order:
        raise DomainError(
            f'{n_max} cumulants need {n_max} moments, have {m.order}'
        )
    series = m.padded()[:n_max + 1]
    powers = [np.array([1.0])]
    for _ in range(n_max):
        powers.append(P.polymul(powers[-1], series)[:n_max + 1])
    cumulants = []
    for n in range(1, n_max + 1):
        value = m[n]
        for s in range(1, n):
            power = powers[s]
            if n - s < power.size:
                value -= cumulants[s - 1] * power[n - s]
        cumulants.append(float(value))
    return cumulants


def vz_series(m, n_max):
    """ Coefficients of v z(v) = 1 + Σ_p R_p v^p, constant term first """
    return [1.0] + free_cumulants_from_moments(m, n_max)


def r_transform(cumulants, w):
    """ 1/w + Σ_p R_p w^(p-1), the functional inverse of G """
    return 1.0 / w + sum(r * w ** p for p, r in enumerate(cumulants))


def _check_branch(b, z):
    top = float(np.max(b.values))
    if not z > top:
        raise BranchError(
            f'resolvent needs z > max b = {top:.17g}, got {z!r}', z=z
        )
    return top


def resolvent(b, z):
    _check_branch(b, z)
    return (1.0 / (z - b)).integral()


def solve_z(b, v):
    """ The root z > max b of resolvent(b, z) = v """
    if not v > 0:
        raise DomainError(f'v must be positive, got {v!r}')
    top = float(np.max(b.values))

    def defect(z):
        return (1.0 / (z - b)).integral() - v

    upper = top + 1.0 / v
    epsilon = min(1.0, 1.0 / v) / 2
    while defect(top + epsilon) < 0:
        epsilon /= 16
        if epsilon < EDGE_FLOOR * max(1.0, abs(top)):
            raise EdgeError(
                f'root for v={v!r} sits at the edge max b = {top:.17g}',
                v=v,
            )
    if defect(upper) >= 0:
        return upper
    try:
        z = brentq(defect, top + epsilon, upper, xtol=1e-14, rtol=RTOL)
    except (ValueError, RuntimeError) as exc:
        raise SolverError(f'solve_z failed for v={v!r}: {exc}', v=v) from exc
    logger.debug('solve_z: v=%g, z=%.17g', v, z)
    return z
