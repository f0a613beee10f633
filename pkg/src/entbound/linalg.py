"""Dense linear algebra on bipartite states.

State containers (:class:`PureState`, :class:`DensityMatrix`,
:class:`SchmidtVector`), the spectral primitives every other module uses, and
seeded random-state generators.

Subsystem ordering is big-endian: a vector on an ``m x n`` space is indexed as
``a * n + b`` with ``a`` on subsystem A (dimension ``m``) and ``b`` on B. The
package follows the ``m <= n`` convention throughout; states with a larger A
side must be swapped first (see :meth:`PureState.swap`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidInput, NumericalFailure

SeedLike = Union[int, np.random.Generator, np.random.SeedSequence, None]

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
NORM_TOL = 1e-10


def _check_dims(m: int, n: int) -> None:
    if int(m) != m or int(n) != n or m < 1 or n < 1:
        raise InvalidInput(f"dimensions must be positive integers, got {m}x{n}")
    if m > n:
        raise InvalidInput(f"expected m <= n, got {m}x{n}; swap the subsystems first")


def _as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2:
        raise InvalidInput(f"{name} must be two-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidInput(f"{name} is empty")
    return arr


def hermiticity_error(a: np.ndarray) -> float:
    """Largest entrywise deviation ``max |A - A^dagger|``."""
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


@dataclass(frozen=True)
class SchmidtVector:
    """Decreasing, nonnegative Schmidt values summing to one.

    Zero entries are kept so that ``len(values)`` is always the dimension ``m``
    of the smaller subsystem.
    """

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).copy()
        if v.ndim != 1 or v.size == 0:
            raise InvalidInput(f"Schmidt vector must be a non-empty 1-d array, got shape {v.shape}")
        if np.any(v < -PSD_TOL):
            raise InvalidInput(f"negative Schmidt value {v.min():.3e}")
        v = np.clip(v, 0.0, None)
        if abs(v.sum() - 1.0) > NORM_TOL:
            raise InvalidInput(f"Schmidt values sum to {v.sum():.12g}, expected 1")
        # stable sort keeps the original order among ties
        v = v[np.argsort(-v, kind="stable")]
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def m(self) -> int:
        return int(self.values.size)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def __len__(self) -> int:
        return self.m

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector on an ``m x n`` space."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self):
        _check_dims(self.dim_a, self.dim_b)
        psi = np.asarray(self.amplitudes, dtype=complex).reshape(-1).copy()
        if psi.size != self.dim_a * self.dim_b:
            raise InvalidInput(
                f"expected {self.dim_a * self.dim_b} amplitudes for {self.dim_a}x{self.dim_b}, got {psi.size}"
            )
        norm = np.linalg.norm(psi)
        if abs(norm**2 - 1.0) > NORM_TOL:
            raise InvalidInput(f"state has squared norm {norm**2:.12g}, expected 1")
        psi.setflags(write=False)
        object.__setattr__(self, "amplitudes", psi)

    @classmethod
    def from_amplitudes(cls, amplitudes, m: int, n: int) -> "PureState":
        """Build a state from unnormalized amplitudes."""
        psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(psi)
        if norm == 0:
            raise InvalidInput("zero vector cannot be normalized")
        return cls(m, n, psi / norm)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def coefficient_matrix(self) -> np.ndarray:
        """The ``m x n`` matrix ``psi[a, b]``."""
        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(self.dim_a, self.dim_b, self.projector())

    def apply_local(self, u_a: np.ndarray, u_b: np.ndarray) -> "PureState":
        """Return ``(u_a (x) u_b) |psi>``."""
        c = u_a @ self.coefficient_matrix() @ u_b.T
        return PureState(self.dim_a, self.dim_b, c.reshape(-1))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace operator on ``m x n``."""

    dim_a: int
    dim_b: int
    matrix: np.ndarray

    def __post_init__(self):
        _check_dims(self.dim_a, self.dim_b)
        rho = _as_complex_matrix(self.matrix, "density matrix").copy()
        d = self.dim_a * self.dim_b
        if rho.shape != (d, d):
            raise InvalidInput(f"expected a {d}x{d} matrix for {self.dim_a}x{self.dim_b}, got {rho.shape}")
        if hermiticity_error(rho) > HERMITIAN_TOL:
            raise InvalidInput(f"matrix is not Hermitian (deviation {hermiticity_error(rho):.3e})")
        tr = np.trace(rho).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidInput(f"trace is {tr:.12g}, expected 1")
        lo = np.linalg.eigvalsh(rho)[0]
        if lo < -PSD_TOL:
            raise InvalidInput(f"matrix has negative eigenvalue {lo:.3e}")
        rho.setflags(write=False)
        object.__setattr__(self, "matrix", rho)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenvalues (decreasing, tiny negatives clipped to 0) and eigenvectors."""
        w, v = hermitian_eigendecomposition(self.matrix)
        return clip_spectrum(w), v

    def rank(self, tol: float = 1e-12) -> int:
        return int(np.sum(self.spectrum()[0] > tol))

    def expectation(self, op: np.ndarray) -> complex:
        return complex(np.trace(self.matrix @ op))

    def apply_local(self, u_a: np.ndarray, u_b: np.ndarray) -> "DensityMatrix":
        u = np.kron(u_a, u_b)
        rho = u @ self.matrix @ u.conj().T
        return DensityMatrix(self.dim_a, self.dim_b, (rho + rho.conj().T) / 2)


def clip_spectrum(w: np.ndarray, tol: float = PSD_TOL) -> np.ndarray:
    """Clip eigenvalues in ``[-tol, 0)`` to zero; anything more negative is invalid."""
    w = np.asarray(w, dtype=float)
    if np.any(w < -tol):
        raise InvalidInput(f"eigenvalue {w.min():.3e} is below -{tol:g}")
    return np.clip(w, 0.0, None)


def hermitian_eigendecomposition(matrix, tol: float = 1e-8) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decompose a Hermitian matrix.

    Returns
    -------
    eigenvalues : ndarray
        Real eigenvalues in decreasing order.
    eigenvectors : ndarray
        Orthonormal columns, ``eigenvectors[:, i]`` belonging to ``eigenvalues[i]``.
    """
    a = _as_complex_matrix(matrix)
    if a.shape[0] != a.shape[1]:
        raise InvalidInput(f"matrix must be square, got {a.shape}")
    if hermiticity_error(a) > tol:
        raise InvalidInput(f"matrix is not Hermitian (deviation {hermiticity_error(a):.3e})")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigendecomposition did not converge: {exc}") from exc
    return w[::-1].copy(), v[:, ::-1].copy()


def singular_values(matrix) -> np.ndarray:
    """Singular values in decreasing order, ``min(rows, cols)`` of them."""
    a = _as_complex_matrix(matrix)
    try:
        return np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"SVD did not converge: {exc}") from exc


def schmidt_decompose(psi: PureState) -> SchmidtVector:
    """Schmidt values (squared Schmidt coefficients) of a pure state.

    The values are the squared singular values of the ``m x n`` coefficient
    matrix, padded with zeros to length ``m``.
    """
    amps = np.asarray(psi.amplitudes)
    norm2 = float(np.vdot(amps, amps).real)
    if abs(norm2 - 1.0) > 1e-6:
        raise InvalidInput(f"state has squared norm {norm2:.9g}, expected 1")
    s = singular_values(psi.coefficient_matrix()) ** 2
    # absorb the residual normalization error so the values sum to 1 exactly
    return SchmidtVector(s / s.sum())


def schmidt_values_batch(coefficients: np.ndarray) -> np.ndarray:
    """Schmidt values for a stack of (unnormalized) coefficient matrices.

    ``coefficients`` has shape ``(..., m, n)``; rows of the result are
    normalized to sum to one. Zero-norm entries give all-zero rows.
    """
    s = np.linalg.svd(coefficients, compute_uv=False) ** 2
    tot = s.sum(axis=-1, keepdims=True)
    return np.divide(s, tot, out=np.zeros_like(s), where=tot > 0)


def partial_transpose(rho, dims: tuple[int, int] | None = None) -> np.ndarray:
    """Transpose on subsystem B.

    Accepts a :class:`DensityMatrix` or a raw square matrix with explicit
    ``dims=(m, n)``.
    """
    if isinstance(rho, DensityMatrix):
        m, n = rho.dim_a, rho.dim_b
        a = rho.matrix
    else:
        if dims is None:
            raise InvalidInput("dims=(m, n) is required for a raw matrix")
        m, n = dims
        a = _as_complex_matrix(rho)
        if a.shape != (m * n, m * n):
            raise InvalidInput(f"matrix shape {a.shape} does not match dims {dims}")
    return a.reshape(m, n, m, n).transpose(0, 3, 2, 1).reshape(m * n, m * n)


def trace_norm(matrix) -> float:
    """Sum of the singular values of a square matrix."""
    a = _as_complex_matrix(matrix)
    if a.shape[0] != a.shape[1]:
        raise InvalidInput(f"trace norm needs a square matrix, got {a.shape}")
    return float(np.sum(singular_values(a)))


def fidelity_with_pure(rho: DensityMatrix, phi: PureState) -> float:
    """Overlap ``<phi|rho|phi>`` (the squared Uhlmann fidelity)."""
    if (rho.dim_a, rho.dim_b) != (phi.dim_a, phi.dim_b):
        raise InvalidInput(
            f"dimension mismatch: state is {rho.dim_a}x{rho.dim_b}, witness is {phi.dim_a}x{phi.dim_b}"
        )
    f = np.vdot(phi.amplitudes, rho.matrix @ phi.amplitudes).real
    if f < -1e-10 or f > 1 + 1e-10:
        raise InvalidInput(f"overlap {f:.12g} outside [0, 1]")
    return float(min(max(f, 0.0), 1.0))


# -- random states ---------------------------------------------------------


def _rng(seed: SeedLike) -> np.random.Generator:
    return np.random.default_rng(seed)


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian samples.

    Real and imaginary parts are drawn interleaved so that a larger request
    with the same generator state shares its prefix with a smaller one.
    """
    z = rng.standard_normal(tuple(np.atleast_1d(shape)) + (2,))
    return (z[..., 0] + 1j * z[..., 1]) / np.sqrt(2)


def haar_unitary(d: int, seed: SeedLike = None) -> np.ndarray:
    """Haar-distributed ``d x d`` unitary (QR of a Ginibre matrix with phase fix)."""
    return haar_isometry(d, d, seed)


def haar_isometry(rows: int, cols: int, seed: SeedLike = None) -> np.ndarray:
    """``rows x cols`` matrix with orthonormal columns, Haar distributed."""
    if cols > rows:
        raise InvalidInput(f"isometry needs rows >= cols, got {rows}x{cols}")
    z = complex_normal(_rng(seed), (rows, cols))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_pure_state(m: int, n: int, seed: SeedLike = None) -> PureState:
    """Haar-random pure state on ``m x n``."""
    _check_dims(m, n)
    return PureState.from_amplitudes(complex_normal(_rng(seed), m * n), m, n)


def random_schmidt_vector(m: int, seed: SeedLike = None) -> SchmidtVector:
    """Schmidt vector drawn uniformly from the probability simplex."""
    if int(m) != m or m < 1:
        raise InvalidInput(f"m must be a positive integer, got {m}")
    return SchmidtVector(random_schmidt_values(m, 1, seed)[0])


def random_schmidt_values(m: int, size: int, seed: SeedLike = None) -> np.ndarray:
    """``size`` uniform simplex samples as rows, each sorted decreasingly."""
    if int(m) != m or m < 1:
        raise InvalidInput(f"m must be a positive integer, got {m}")
    if size < 1:
        raise InvalidInput(f"size must be >= 1, got {size}")
    x = _rng(seed).dirichlet(np.ones(m), size=size)
    return -np.sort(-x, axis=1)


def random_density_matrix(m: int, n: int, rank: int | None = None, seed: SeedLike = None) -> DensityMatrix:
    """Random mixed state as the marginal of a Haar-random purification.

    The purification lives on ``(m*n) x rank``; ``rank`` defaults to ``m*n``.
    """
    _check_dims(m, n)
    d = m * n
    rank = d if rank is None else rank
    if int(rank) != rank or not 1 <= rank <= d:
        raise InvalidInput(f"rank must be in [1, {d}], got {rank}")
    g = complex_normal(_rng(seed), (d, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(m, n, rho / np.trace(rho).real)


# -- named states ----------------------------------------------------------


def maximally_entangled(m: int, n: int | None = None) -> PureState:
    """``sum_i |ii> / sqrt(m)`` embedded in ``m x n``."""
    n = m if n is None else n
    c = np.zeros((m, n), dtype=complex)
    c[np.arange(m), np.arange(m)] = 1 / np.sqrt(m)
    return PureState(m, n, c.reshape(-1))


def basis_state(m: int, n: int, a: int, b: int) -> PureState:
    psi = np.zeros(m * n, dtype=complex)
    psi[a * n + b] = 1.0
    return PureState(m, n, psi)


def product_state(psi_a, psi_b) -> PureState:
    psi_a = np.asarray(psi_a, dtype=complex)
    psi_b = np.asarray(psi_b, dtype=complex)
    return PureState.from_amplitudes(np.kron(psi_a, psi_b), psi_a.size, psi_b.size)


def maximally_mixed(m: int, n: int) -> DensityMatrix:
    d = m * n
    return DensityMatrix(m, n, np.eye(d) / d)


def isotropic_state(p: float, d: int) -> DensityMatrix:
    """``p |psi+><psi+| + (1 - p) 1 / d^2`` on ``d x d``."""
    phi = maximally_entangled(d).projector()
    return DensityMatrix(d, d, p * phi + (1 - p) * np.eye(d * d) / d**2)


def werner_state(p: float) -> DensityMatrix:
    """Two-qubit ``p |psi-><psi-| + (1 - p) 1 / 4``."""
    singlet = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)
    return DensityMatrix(2, 2, p * np.outer(singlet, singlet.conj()) + (1 - p) * np.eye(4) / 4)
