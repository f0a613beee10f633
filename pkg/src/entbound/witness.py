"""Witness states, the witness statistic, and local-observable expansions.

A witness is any pure entangled reference state ``|phi>`` with Schmidt values
``s_1 >= s_2 >= ...``. Measuring ``<phi|rho|phi>`` on an unknown state fixes

    Lambda = max(<phi|rho|phi> / (s_1 m), 1/m),

which is all the closed-form bounds in :mod:`entbound.curves` need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import LambdaValue
from .errors import DomainError, InvalidInput, NotEntangled
from .linalg import (
    DensityMatrix,
    PureState,
    SchmidtVector,
    fidelity_with_pure,
    schmidt_decompose,
)

ENTANGLED_TOL = 1e-12


@dataclass(frozen=True)
class WitnessSpec:
    """A pure entangled reference state with its Schmidt data cached."""

    phi: PureState
    schmidt: SchmidtVector

    @property
    def s1(self) -> float:
        return float(self.schmidt.values[0])

    @property
    def m(self) -> int:
        return self.phi.dim_a

    @property
    def n(self) -> int:
        return self.phi.dim_b


@dataclass(frozen=True)
class LOOTerm:
    """One product term ``coefficient * (op_a (x) op_b)``."""

    coefficient: float
    op_a: np.ndarray
    op_b: np.ndarray

    def operator(self) -> np.ndarray:
        return np.kron(self.op_a, self.op_b)


def make_witness(phi: PureState) -> WitnessSpec:
    """Cache the Schmidt data of ``phi``; raises :class:`NotEntangled` for product states."""
    mu = schmidt_decompose(phi)
    if np.sum(mu.values > ENTANGLED_TOL) < 2:
        raise NotEntangled("witness state is a product state (Schmidt rank 1)")
    return WitnessSpec(phi=phi, schmidt=mu)


def lambda_from_fidelity(fid: float, s1: float, m: int) -> LambdaValue:
    """``max(fid / (s1 m), 1/m)`` with the clamping policy of :class:`LambdaValue`.

    ``fid`` is the overlap ``<phi|rho|phi>``, i.e. the squared root-fidelity.
    """
    if int(m) != m or m < 2:
        raise DomainError(f"m must be an integer >= 2, got {m}")
    if not 1.0 / m - 1e-12 <= s1 <= 1.0:
        raise DomainError(f"s1={s1!r} outside [1/{m}, 1]")
    if not 0.0 <= fid <= 1.0 + 1e-6:
        raise DomainError(f"fidelity {fid!r} outside [0, 1]")
    if fid > s1 * m + 1e-6:
        raise DomainError(f"fidelity {fid!r} exceeds s1*m = {s1 * m!r}; Lambda would exceed 1")
    return LambdaValue(max(fid / (s1 * m), 1.0 / m), int(m))


def compute_lambda(rho: DensityMatrix, w: WitnessSpec) -> LambdaValue:
    """Witness statistic of ``rho`` from the exact overlap with ``w.phi``."""
    return lambda_from_fidelity(fidelity_with_pure(rho, w.phi), w.s1, w.m)


def witness_operator(w: WitnessSpec) -> np.ndarray:
    """``W = s1 * 1 - |phi><phi|``; nonnegative on every product state."""
    return w.s1 * np.eye(w.phi.dim) - w.phi.projector()


def loo_basis(d: int) -> list[np.ndarray]:
    """Complete Hilbert-Schmidt-orthonormal Hermitian basis of ``d x d`` matrices.

    Order: the ``d`` diagonal projectors, then for each pair ``a < b`` the
    symmetric ``(|a><b| + |b><a|)/sqrt(2)`` and antisymmetric
    ``(|a><b| - |b><a|)/(i sqrt(2))`` combinations.
    """
    if int(d) != d or d < 2:
        raise InvalidInput(f"LOO basis needs d >= 2, got {d}")
    ops = []
    for a in range(d):
        g = np.zeros((d, d), dtype=complex)
        g[a, a] = 1
        ops.append(g)
    for a in range(d):
        for b in range(a + 1, d):
            sym = np.zeros((d, d), dtype=complex)
            sym[a, b] = sym[b, a] = 1 / np.sqrt(2)
            anti = np.zeros((d, d), dtype=complex)
            anti[a, b] = -1j / np.sqrt(2)
            anti[b, a] = 1j / np.sqrt(2)
            ops += [sym, anti]
    return ops


def loo_term_count(d: int) -> int:
    """Number of local measurement settings for a ``d x d`` witness."""
    return d * d


def _local_frames(phi: PureState) -> tuple[np.ndarray, np.ndarray]:
    """Unitaries ``V_A`` (m x m), ``V_B`` (n x n) taking ``sum sqrt(s_i)|ii>`` to ``phi``."""
    u, _, vh = np.linalg.svd(phi.coefficient_matrix(), full_matrices=True)
    return u, vh.T


def loo_expansion(w: WitnessSpec) -> list[LOOTerm]:
    """Write ``|phi><phi|`` as ``m^2`` products of local Hermitian observables.

    With ``V_A, V_B`` the Schmidt frames of ``phi`` and ``G_k`` the LOO basis,
    the terms are ``V_A G_k V_A^dag (x) V_B G_k^T V_B^dag``. When ``m < n`` the
    B-side operators act on the ``m``-dimensional Schmidt support padded by
    zeros. Coefficients are the actual expectations ``<phi|term|phi>``, which
    fixes the sign of the antisymmetric terms regardless of phase conventions.
    """
    m, n = w.m, w.n
    v_a, v_b = _local_frames(w.phi)
    c = w.phi.coefficient_matrix()
    terms = []
    for g in loo_basis(m):
        op_a = v_a @ g @ v_a.conj().T
        gb = np.zeros((n, n), dtype=complex)
        gb[:m, :m] = g.T
        op_b = v_b @ gb @ v_b.conj().T
        # <phi| A (x) B |phi> = Tr(C^dag A C B^T) for the coefficient matrix C
        coeff = np.trace(c.conj().T @ op_a @ c @ op_b.T)
        terms.append(LOOTerm(float(coeff.real), op_a, op_b))
    return terms


def loo_reconstruct(terms: list[LOOTerm]) -> np.ndarray:
    """``sum_k c_k (A_k (x) B_k)``."""
    return sum(t.coefficient * t.operator() for t in terms)


def loo_expectation(rho: DensityMatrix, terms: list[LOOTerm]) -> float:
    """``<phi|rho|phi>`` assembled term by term from local expectations."""
    m, n = rho.dim_a, rho.dim_b
    r = rho.matrix.reshape(m, n, m, n)
    total = 0.0
    for t in terms:
        # Tr(rho (A (x) B)) without forming the Kronecker product
        total += t.coefficient * np.einsum("ajbk,ba,kj->", r, t.op_a, t.op_b).real
    return float(total)
