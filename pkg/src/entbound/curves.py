"""Minimal-measure boundary curves and their convex hulls.

For a pure state with Schmidt vector ``mu`` on ``m x n`` let
``lam = (sum sqrt(mu_i))^2 / m``. Each measure has a lower boundary curve, the
smallest value it can take at a given ``lam``:

=============  ==========  ===================================
measure        boundary    convex hull
=============  ==========  ===================================
EOF            ``R``       :func:`co_r` (curve, then a line)
GME            ``Q``       ``Q`` itself (already convex)
concurrence    ``P``       :func:`co_p` (chord)
CREN           linear      :func:`cren_bound`
G-concurrence  ``K``       :func:`co_k` (hinge)
=============  ==========  ===================================

Evaluated at the witness statistic ``Lambda`` of a mixed state, each hull is a
lower bound on the corresponding convex-roof measure.

All curve functions are vectorized over ``lam``. Inputs slightly outside
``[1/m, 1]`` are clamped (see :func:`clamp_lambda`); anything further out
raises :class:`~entbound.errors.DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvalidInput
from .linalg import SchmidtVector
from .measures import MeasureKind

LOWER_SLACK = 1e-9
UPPER_SLACK = 1e-6


def _check_m(m) -> int:
    if int(m) != m or m < 2:
        raise DomainError(f"subsystem dimension m must be an integer >= 2, got {m}")
    return int(m)


def clamp_lambda(lam, m):
    """Clamp ``lam`` into ``[1/m, 1]``.

    Values within ``1e-9`` below ``1/m`` or ``1e-6`` above 1 are treated as
    noise and clamped; anything further out is rejected.
    """
    m = _check_m(m)
    arr = np.asarray(lam, dtype=float)
    lo = 1.0 / m
    if np.any(np.isnan(arr)):
        raise DomainError("lambda is NaN")
    if np.any(arr < lo - LOWER_SLACK) or np.any(arr > 1.0 + UPPER_SLACK):
        bad = arr[(arr < lo - LOWER_SLACK) | (arr > 1.0 + UPPER_SLACK)].flat[0]
        raise DomainError(f"lambda={bad!r} outside [1/{m}, 1]")
    out = np.clip(arr, lo, 1.0)
    return float(out) if out.ndim == 0 else out


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def binary_entropy(x):
    """``H2(x) = -x log2 x - (1-x) log2 (1-x)`` with ``0 log 0 = 0``."""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    y = 1.0 - x
    hx = np.where(x > 0, -x * np.log2(np.where(x > 0, x, 1.0)), 0.0)
    hy = np.where(y > 0, -y * np.log2(np.where(y > 0, y, 1.0)), 0.0)
    return _out(hx + hy)


def gamma_plus(lam, m):
    """``[sqrt(lam) + sqrt((m-1)(1-lam))]^2 / m``.

    The largest Schmidt value ``t`` of the boundary vector at ``lam``. It is a
    decreasing involution of ``[1/m, 1]``.
    """
    lam = np.asarray(clamp_lambda(lam, m))
    g = (np.sqrt(lam) + np.sqrt((m - 1) * (1.0 - lam))) ** 2 / m
    return _out(np.clip(g, 1.0 / m, 1.0))


def gamma_minus(lam, m):
    """``[sqrt(lam) - sqrt((m-1)(1-lam))]^2 / m``, the small Schmidt value on the K branch."""
    lam = np.asarray(clamp_lambda(lam, m))
    return _out((np.sqrt(lam) - np.sqrt((m - 1) * (1.0 - lam))) ** 2 / m)


def beta(lam, m):
    """``[sqrt(lam) + sqrt((1-lam)/(m-1))]^2 / m``, the repeated Schmidt value on the K branch."""
    lam = np.asarray(clamp_lambda(lam, m))
    return _out((np.sqrt(lam) + np.sqrt((1.0 - lam) / (m - 1))) ** 2 / m)


def r_curve(lam, m):
    """Minimal entanglement entropy at a given ``lam``."""
    t = np.asarray(gamma_plus(lam, m))
    return _out(np.asarray(binary_entropy(t)) + (1.0 - t) * np.log2(m - 1))


def r_breakpoint(m) -> float:
    """Where the hull of ``R`` leaves the curve: ``4(m-1)/m^2``."""
    m = _check_m(m)
    return 4.0 * (m - 1) / m**2


def co_r(lam, m):
    """Convex hull of :func:`r_curve`: the curve up to ``4(m-1)/m^2``, then a straight line to ``(1, log2 m)``."""
    m = _check_m(m)
    lam = np.asarray(clamp_lambda(lam, m))
    if m == 2:
        return r_curve(lam, m)
    line = m * np.log2(m - 1) / (m - 2) * (lam - 1.0) + np.log2(m)
    return _out(np.where(lam <= r_breakpoint(m), r_curve(lam, m), line))


def q_curve(lam, m):
    """Minimal geometric measure ``1 - gamma_plus(lam)``; convex, so its own hull."""
    return _out(1.0 - np.asarray(gamma_plus(lam, m)))


def p_curve(lam, m):
    """Minimal concurrence at a given ``lam`` (concave in ``lam``)."""
    g = np.asarray(gamma_plus(lam, m))
    return _out(np.sqrt(np.clip(2.0 * (1.0 - g) * (m * g + m - 2) / (m - 1), 0.0, None)))


def co_p(lam, m):
    """Chord from ``(1/m, 0)`` to ``(1, sqrt(2(m-1)/m))``."""
    lam = np.asarray(clamp_lambda(lam, m))
    return _out(np.sqrt(2.0 * m / (m - 1)) * (lam - 1.0 / m))


def cren_bound(lam, m):
    """``m lam - 1``: pure-state negativity is exactly linear in ``lam``."""
    lam = np.asarray(clamp_lambda(lam, m))
    return _out(np.clip(m * lam - 1.0, 0.0, None))


def k_curve(lam, m):
    """Minimal G-concurrence; zero for ``lam <= (m-1)/m``."""
    lam = np.asarray(clamp_lambda(lam, m))
    hinge = (m - 1) / m
    active = lam > hinge
    # evaluate only where gamma_minus belongs to the small-t branch
    safe = np.where(active, lam, 1.0)
    g = np.asarray(gamma_minus(safe, m))
    b = np.asarray(beta(safe, m))
    k = m * (g * b ** (m - 1)) ** (1.0 / m)
    return _out(np.where(active, k, 0.0))


def co_k(lam, m):
    """``max(1 - m(1 - lam), 0)``."""
    lam = np.asarray(clamp_lambda(lam, m))
    # explicit zero at and below the hinge; 1 - m(1 - lam) leaves rounding dust there
    return _out(np.where(lam > (m - 1) / m, np.maximum(1.0 - m * (1.0 - lam), 0.0), 0.0))


def boundary_schmidt_vector(t: float, m: int) -> SchmidtVector:
    """``{t, (1-t)/(m-1), ..., (1-t)/(m-1)}`` sorted decreasingly.

    For ``t`` in ``[1/m, 1]`` this traces the R, Q and P boundaries; for ``t``
    in ``[0, 1/m]`` the K boundary.
    """
    m = _check_m(m)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t={t!r} outside [0, 1]")
    return SchmidtVector(np.r_[t, np.full(m - 1, (1.0 - t) / (m - 1))])


def lambda_of_boundary(t, m):
    """``lam(t) = (sqrt(t) + sqrt((1-t)(m-1)))^2 / m`` for the boundary vector."""
    t = np.asarray(t, dtype=float)
    return _out((np.sqrt(t) + np.sqrt((1.0 - t) * (m - 1))) ** 2 / m)


# -- numeric hull ----------------------------------------------------------


def lower_convex_envelope(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Vertices of the lower convex hull of points sorted by strictly increasing ``x``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    hull: list[int] = []
    for i in range(x.size):
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            # drop b if it lies on or above the segment a -> i
            cross = (x[b] - x[a]) * (y[i] - y[a]) - (y[b] - y[a]) * (x[i] - x[a])
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(i)
    idx = np.asarray(hull)
    return x[idx], y[idx]


def generic_co_bound(curve_samples, lam):
    """Evaluate the lower convex envelope of a sampled curve at ``lam``.

    Parameters
    ----------
    curve_samples : array_like, shape (N, 2)
        ``(lambda, value)`` pairs with strictly increasing ``lambda``,
        ``N >= 3``.
    lam : float or array_like
        Points inside the sampled range.

    Works for any pure-state measure whose minimal curve has been tabulated;
    the closed-form hulls in this module are special cases.
    """
    pts = np.asarray(curve_samples, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidInput(f"curve samples must have shape (N, 2), got {pts.shape}")
    if pts.shape[0] < 3:
        raise InvalidInput(f"need at least 3 curve samples, got {pts.shape[0]}")
    if not np.all(np.isfinite(pts)):
        raise InvalidInput("curve samples contain non-finite values")
    x, y = pts[:, 0], pts[:, 1]
    if np.any(np.diff(x) <= 0):
        raise InvalidInput("curve sample abscissae must be strictly increasing")
    lam = np.asarray(lam, dtype=float)
    span = 1e-12 * max(1.0, abs(x[-1] - x[0]))
    if np.any(lam < x[0] - span) or np.any(lam > x[-1] + span):
        raise DomainError(f"lambda outside sampled range [{x[0]}, {x[-1]}]")
    hx, hy = lower_convex_envelope(x, y)
    return _out(np.interp(lam, hx, hy))


# -- aggregated report -----------------------------------------------------


@dataclass(frozen=True)
class LambdaValue:
    """The witness statistic together with the dimension it refers to.

    Construction applies :func:`clamp_lambda`.
    """

    lam: float
    m: int

    def __post_init__(self):
        object.__setattr__(self, "m", _check_m(self.m))
        object.__setattr__(self, "lam", float(clamp_lambda(float(self.lam), self.m)))

    def __float__(self) -> float:
        return self.lam


CLOSED_FORM_BOUNDS = {
    MeasureKind.EOF: co_r,
    MeasureKind.GME: q_curve,
    MeasureKind.CONCURRENCE: co_p,
    MeasureKind.CREN: cren_bound,
    MeasureKind.GCONCURRENCE: co_k,
}


def lower_bound(kind, lam, m):
    """Closed-form lower bound for one measure."""
    return CLOSED_FORM_BOUNDS[MeasureKind.parse(kind)](lam, m)


@dataclass(frozen=True)
class BoundReport:
    """Lower bounds on all five measures at one value of the witness statistic."""

    lam: LambdaValue
    eof_lb: float
    gme_lb: float
    concurrence_lb: float
    cren_lb: float
    gconcurrence_lb: float
    branch_notes: dict = field(default_factory=dict)

    def bound(self, kind) -> float:
        kind = MeasureKind.parse(kind)
        return getattr(self, f"{kind.value}_lb")

    def as_dict(self) -> dict:
        return {
            "lambda": self.lam.lam,
            "m": self.lam.m,
            **{k.value: self.bound(k) for k in MeasureKind},
            "branches": {k.value: self.branch_notes[k.value] for k in MeasureKind},
        }


def bound_report(lam: LambdaValue) -> BoundReport:
    """All five closed-form lower bounds plus which hull branch produced each."""
    x, m = lam.lam, lam.m
    if m == 2:
        eof_note = "curve (m=2, no linear branch)"
    elif x <= r_breakpoint(m):
        eof_note = "curve"
    else:
        eof_note = "linear"
    notes = {
        MeasureKind.EOF.value: eof_note,
        MeasureKind.GME.value: "curve",
        MeasureKind.CONCURRENCE.value: "chord",
        MeasureKind.CREN.value: "linear",
        MeasureKind.GCONCURRENCE.value: "linear" if x > (m - 1) / m else "hinge-zero",
    }
    return BoundReport(
        lam=lam,
        eof_lb=co_r(x, m),
        gme_lb=q_curve(x, m),
        concurrence_lb=co_p(x, m),
        cren_lb=cren_bound(x, m),
        gconcurrence_lb=co_k(x, m),
        branch_notes=notes,
    )
