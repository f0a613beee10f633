"""Inequalities linking negativity, geometric measure and concurrence.

For any ``m x n`` state (``m <= n``)::

    N   <= m * gamma(1 - E_G) - 1
    E_G >= 1 - gamma((N + 1) / m)
    c^2 + (1 - e_G)^2 <= 1

with ``gamma = gamma_plus``, ``c = sqrt(m / (2(m-1))) C`` and
``e_G = m E_G / (m-1)``. The first two are equivalent because ``gamma`` is a
decreasing involution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import clamp_lambda, gamma_plus
from .errors import DomainError
from .measures import concurrence_pure, gme_pure, negativity_pure


def _check_range(x, lo, hi, name, tol=1e-9):
    arr = np.asarray(x, dtype=float)
    if np.any(arr < lo - tol) or np.any(arr > hi + tol) or np.any(np.isnan(arr)):
        raise DomainError(f"{name} outside [{lo}, {hi}]")
    return np.clip(arr, lo, hi)


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def cren_upper_from_gme(e_g, m):
    """Largest negativity compatible with a geometric measure ``e_g``."""
    e_g = _check_range(e_g, 0.0, 1.0 - 1.0 / m, "geometric measure")
    return _out(m * np.asarray(gamma_plus(1.0 - e_g, m)) - 1.0)


def gme_lower_from_cren(nv, m):
    """Smallest geometric measure compatible with a negativity ``nv``."""
    nv = _check_range(nv, 0.0, m - 1.0, "negativity")
    return _out(1.0 - np.asarray(gamma_plus(clamp_lambda((nv + 1.0) / m, m), m)))


def normalized_concurrence(c, m):
    return c * np.sqrt(m / (2.0 * (m - 1)))


def normalized_gme(e_g, m):
    return m * e_g / (m - 1)


def tradeoff_slack(mu):
    """``1 - c^2 - (1 - e_G)^2`` for a pure state; nonnegative up to rounding."""
    arr = np.asarray(mu, dtype=float)
    m = arr.shape[-1]
    if m < 2:
        raise DomainError("tradeoff needs m >= 2")
    c = normalized_concurrence(np.asarray(concurrence_pure(arr)), m)
    e = normalized_gme(np.asarray(gme_pure(arr)), m)
    return _out(1.0 - c**2 - (1.0 - e) ** 2)


@dataclass(frozen=True)
class RelationReport:
    cren_upper_from_gme: float
    gme_lower_from_cren: float
    tradeoff_slack: float


def relation_report(mu) -> RelationReport:
    """Evaluate the three relations on a pure state's Schmidt vector."""
    arr = np.asarray(mu, dtype=float)
    m = arr.size
    return RelationReport(
        cren_upper_from_gme=cren_upper_from_gme(gme_pure(arr), m),
        gme_lower_from_cren=gme_lower_from_cren(negativity_pure(arr), m),
        tradeoff_slack=tradeoff_slack(arr),
    )
