"""Independent reference values for checking the lower bounds.

* exact two-qubit concurrence and entanglement of formation (Wootters),
* mixed-state negativity from the partial transpose,
* a Monte Carlo upper estimate of any convex roof, obtained by averaging the
  pure-state measure over random decompositions of the state.

Every decomposition of ``rho`` is ``|psi~_j> = sum_i U_ji sqrt(p_i) |e_i>`` for
an isometry ``U`` (``K x r``, ``U^dag U = 1``) and the eigenpairs
``(p_i, |e_i>)``, so sampling Haar isometries samples decompositions. The
ensemble average of a pure-state measure over any decomposition is an upper
bound on its convex roof.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import binary_entropy
from .errors import InvalidInput
from .linalg import (
    DensityMatrix,
    SeedLike,
    complex_normal,
    partial_transpose,
    schmidt_decompose,
    schmidt_values_batch,
    PureState,
    trace_norm,
)
from .measures import MeasureKind, PURE_MEASURES, max_pure_value

RANK_TOL = 1e-12
_CHUNK = 1024

_SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


def _require_two_qubits(rho: DensityMatrix) -> None:
    if (rho.dim_a, rho.dim_b) != (2, 2):
        raise InvalidInput(f"Wootters formula needs a 2x2 state, got {rho.dim_a}x{rho.dim_b}")


def _psd_sqrt(a: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(a)
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T


def wootters_concurrence(rho: DensityMatrix) -> float:
    """``max(0, l1 - l2 - l3 - l4)`` from the spin-flipped state.

    The ``l_i`` are the decreasing eigenvalues of
    ``sqrt(sqrt(rho) rho~ sqrt(rho))`` with ``rho~ = (Y (x) Y) rho* (Y (x) Y)``.
    """
    _require_two_qubits(rho)
    r = rho.matrix
    flipped = _SIGMA_YY @ r.conj() @ _SIGMA_YY
    s = _psd_sqrt(r)
    ev = np.linalg.eigvalsh(s @ flipped @ s)
    lam = np.sort(np.sqrt(np.clip(ev, 0.0, None)))[::-1]
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def eof_from_concurrence(c):
    """Two-qubit entanglement of formation as a function of concurrence."""
    c = np.clip(np.asarray(c, dtype=float), 0.0, 1.0)
    return binary_entropy((1.0 + np.sqrt(1.0 - c**2)) / 2.0)


def wootters_eof(rho: DensityMatrix) -> float:
    """Exact entanglement of formation of a two-qubit state."""
    return float(eof_from_concurrence(wootters_concurrence(rho)))


def negativity_mixed(rho: DensityMatrix) -> float:
    """``||rho^T_B||_1 - 1`` (without the conventional factor 1/2)."""
    n = trace_norm(partial_transpose(rho)) - 1.0
    if n < -1e-10:
        raise InvalidInput(f"trace norm of partial transpose below 1 ({n + 1:.12g}); invalid state")
    return max(n, 0.0)


@dataclass(frozen=True)
class RoofEstimate:
    """Smallest ensemble average found; an upper bound on the convex roof."""

    measure: MeasureKind
    value: float
    trials: int
    ensemble_size: int
    seed: int | None


def default_ensemble_size(rank: int) -> int:
    return min(rank * rank, rank + 4)


def _weighted_eigenvectors(rho: DensityMatrix) -> np.ndarray:
    """Columns ``sqrt(p_i) |e_i>`` for the nonzero eigenvalues, decreasing."""
    w, v = rho.spectrum()
    keep = w > RANK_TOL
    return v[:, keep] * np.sqrt(w[keep])


def _random_isometries(rng: np.random.Generator, count: int, rows: int, cols: int) -> np.ndarray:
    z = complex_normal(rng, (count, rows, cols))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def _ensembles(weighted: np.ndarray, isometries: np.ndarray) -> np.ndarray:
    """Unnormalized ensemble vectors, shape ``(trials, K, d)``."""
    return isometries @ weighted.T


def sample_decomposition(rho: DensityMatrix, ensemble_size: int | None = None, seed: SeedLike = None):
    """One random pure-state decomposition of ``rho``.

    Returns
    -------
    probs : ndarray, shape (K,)
    states : ndarray, shape (K, m*n)
        Normalized vectors (rows); rows with zero weight are left as zeros.
    """
    weighted = _weighted_eigenvectors(rho)
    r = weighted.shape[1]
    k = default_ensemble_size(r) if ensemble_size is None else ensemble_size
    if k < r:
        raise InvalidInput(f"ensemble_size={k} is smaller than rank {r}")
    u = _random_isometries(np.random.default_rng(seed), 1, k, r)
    vecs = _ensembles(weighted, u)[0]
    probs = np.sum(np.abs(vecs) ** 2, axis=1)
    norms = np.sqrt(probs)
    states = np.divide(vecs, norms[:, None], out=np.zeros_like(vecs), where=norms[:, None] > 0)
    return probs, states


def _ensemble_averages(vecs: np.ndarray, m: int, n: int, kinds) -> dict:
    """Weighted averages of each measure over a stack of ensembles."""
    probs = np.sum(np.abs(vecs) ** 2, axis=-1)
    mu = schmidt_values_batch(vecs.reshape(vecs.shape[:-1] + (m, n)))
    return {kind: np.sum(probs * PURE_MEASURES[kind](mu), axis=-1) for kind in kinds}


def convex_roof_upper_all(
    rho: DensityMatrix,
    trials: int = 2000,
    ensemble_size: int | None = None,
    seed: int | None = 0,
    measures=tuple(MeasureKind),
) -> dict[MeasureKind, RoofEstimate]:
    """Roof upper estimates for several measures from one shared set of ensembles.

    The spectral decomposition is always included as a candidate. Trials are
    drawn from a single generator in a prefix-stable order, so for a fixed
    seed the estimate never increases as ``trials`` grows.
    """
    kinds = [MeasureKind.parse(k) for k in measures]
    if trials < 0:
        raise InvalidInput(f"trials must be >= 0, got {trials}")
    m, n = rho.dim_a, rho.dim_b
    weighted = _weighted_eigenvectors(rho)
    r = weighted.shape[1]
    k = default_ensemble_size(r) if ensemble_size is None else int(ensemble_size)
    if k < r:
        raise InvalidInput(f"ensemble_size={k} is smaller than rank {r}")

    if r == 1:
        mu = schmidt_decompose(PureState(m, n, weighted[:, 0] / np.linalg.norm(weighted[:, 0])))
        return {
            kind: RoofEstimate(kind, float(PURE_MEASURES[kind](mu)), trials, k, seed) for kind in kinds
        }

    best = _ensemble_averages(weighted.T[None], m, n, kinds)
    best = {kind: float(v[0]) for kind, v in best.items()}
    rng = np.random.default_rng(seed)
    done = 0
    while done < trials:
        count = min(_CHUNK, trials - done)
        vecs = _ensembles(weighted, _random_isometries(rng, count, k, r))
        for kind, avg in _ensemble_averages(vecs, m, n, kinds).items():
            best[kind] = min(best[kind], float(avg.min()))
        done += count

    out = {}
    for kind in kinds:
        # the roof never exceeds the pure-state maximum; clip rounding only
        value = min(max(best[kind], 0.0), max_pure_value(kind, m))
        out[kind] = RoofEstimate(kind, value, trials, k, seed)
    return out


def convex_roof_upper(
    rho: DensityMatrix,
    measure,
    trials: int = 2000,
    ensemble_size: int | None = None,
    seed: int | None = 0,
) -> RoofEstimate:
    """Upper estimate of the convex roof of one measure by random decompositions.

    ``ensemble_size`` defaults to ``min(r^2, r + 4)`` for a rank-``r`` state.
    """
    kind = MeasureKind.parse(measure)
    return convex_roof_upper_all(rho, trials, ensemble_size, seed, measures=(kind,))[kind]
