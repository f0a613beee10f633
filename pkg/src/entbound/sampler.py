"""Monte Carlo scatter data and curve tables for the boundary plots.

Random Schmidt vectors are drawn uniformly from the simplex; each becomes a
point ``(lam(mu), measure(mu))``. Every point must sit on or above the
measure's boundary curve.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import curves
from .errors import InvalidInput
from .linalg import SeedLike, random_schmidt_values
from .measures import MeasureKind, PURE_MEASURES, lambda_of_schmidt

BOUNDARY_CURVES = {
    MeasureKind.EOF: curves.r_curve,
    MeasureKind.GME: curves.q_curve,
    MeasureKind.CONCURRENCE: curves.p_curve,
    MeasureKind.CREN: curves.cren_bound,
    MeasureKind.GCONCURRENCE: curves.k_curve,
}

CURVES = {
    "R": curves.r_curve,
    "coR": curves.co_r,
    "Q": curves.q_curve,
    "P": curves.p_curve,
    "coP": curves.co_p,
    "K": curves.k_curve,
    "coK": curves.co_k,
    "CREN": curves.cren_bound,
}


@dataclass(frozen=True)
class ScatterRow:
    lam: float
    measure_value: float


def scatter_arrays(m: int, n_samples: int, measure, seed: SeedLike = None) -> tuple[np.ndarray, np.ndarray]:
    """``(lam, value)`` arrays for ``n_samples`` random Schmidt vectors."""
    if int(m) != m or m < 2:
        raise InvalidInput(f"m must be an integer >= 2, got {m}")
    if int(n_samples) != n_samples or n_samples < 1:
        raise InvalidInput(f"n_samples must be a positive integer, got {n_samples}")
    try:
        kind = MeasureKind.parse(measure)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    mu = random_schmidt_values(int(m), int(n_samples), seed)
    return np.asarray(lambda_of_schmidt(mu)), np.asarray(PURE_MEASURES[kind](mu))


def scatter(m: int, n_samples: int, measure, seed: SeedLike = None) -> list[ScatterRow]:
    lam, val = scatter_arrays(m, n_samples, measure, seed)
    return [ScatterRow(float(a), float(b)) for a, b in zip(lam, val)]


def boundary_gaps(m: int, lam, values, measure) -> np.ndarray:
    """``value - boundary(lam)`` for each scatter point."""
    kind = MeasureKind.parse(measure)
    return np.asarray(values) - np.asarray(BOUNDARY_CURVES[kind](lam, m))


def dominance_violations(m: int, lam, values, measure, tol: float = 1e-9) -> int:
    """Number of points lying more than ``tol`` below the boundary curve."""
    return int(np.sum(boundary_gaps(m, lam, values, measure) < -tol))


def curve_table(m: int, curve: str, grid_points: int) -> list[tuple[float, float]]:
    """Uniform ``lam`` grid over ``[1/m, 1]`` with one curve's values."""
    if curve not in CURVES:
        raise InvalidInput(f"unknown curve {curve!r}; expected one of {sorted(CURVES)}")
    if int(grid_points) != grid_points or grid_points < 2:
        raise InvalidInput(f"grid_points must be an integer >= 2, got {grid_points}")
    if int(m) != m or m < 2:
        raise InvalidInput(f"m must be an integer >= 2, got {m}")
    lam = np.linspace(1.0 / m, 1.0, int(grid_points))
    lam[-1] = 1.0
    vals = np.asarray(CURVES[curve](lam, m))
    return list(zip(lam.tolist(), vals.tolist()))


def write_csv(path, rows: Iterable[tuple[float, float]]) -> int:
    """Write ``lambda,value`` rows with 17 significant digits; returns the row count."""
    count = 0
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["lambda", "value"])
        for a, b in rows:
            w.writerow([f"{a:.17g}", f"{b:.17g}"])
            count += 1
    return count
