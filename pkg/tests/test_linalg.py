import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entbound.errors import InvalidInput
from entbound.linalg import (
    DensityMatrix,
    PureState,
    SchmidtVector,
    basis_state,
    complex_normal,
    fidelity_with_pure,
    haar_unitary,
    hermitian_eigendecomposition,
    maximally_entangled,
    maximally_mixed,
    partial_transpose,
    random_density_matrix,
    random_pure_state,
    random_schmidt_vector,
    schmidt_decompose,
    singular_values,
    trace_norm,
)
from entbound.fixtures import dicke_4_2, psi_s


def random_matrix(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


class TestEigendecomposition:
    def test_identity(self):
        w, v = hermitian_eigendecomposition(np.eye(2))
        np.testing.assert_allclose(w, [1, 1])

    def test_diagonal(self):
        w, _ = hermitian_eigendecomposition(np.diag([0.25, 0.75]))
        np.testing.assert_allclose(w, [0.75, 0.25])

    def test_reconstruction_random(self):
        rng = np.random.default_rng(11)
        for _ in range(1000):
            d = rng.integers(1, 9)
            a = random_matrix(rng, d, d)
            h = (a + a.conj().T) / 2
            w, v = hermitian_eigendecomposition(h)
            assert np.all(np.diff(w) <= 1e-12)
            assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - h)) < 1e-8
            assert np.max(np.abs(v.conj().T @ v - np.eye(d))) < 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(InvalidInput):
            hermitian_eigendecomposition(np.array([[0, 1], [0, 0]]))


class TestSingularValues:
    def test_identity(self):
        np.testing.assert_allclose(singular_values(np.eye(3)), [1, 1, 1])

    def test_padded_diagonal(self):
        a = np.array([[3, 0, 0], [0, 4, 0]])
        np.testing.assert_allclose(singular_values(a), [4, 3])

    def test_frobenius_identity(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            r, c = rng.integers(1, 7, size=2)
            a = random_matrix(rng, r, c)
            s = singular_values(a)
            assert s.size == min(r, c)
            assert np.all(np.diff(s) <= 1e-12)
            assert abs(np.sum(s**2) - np.trace(a.conj().T @ a).real) < 1e-8
            ev = np.sort(np.linalg.eigvalsh(a.conj().T @ a))[::-1][: s.size]
            np.testing.assert_allclose(s, np.sqrt(np.clip(ev, 0, None)), atol=1e-8)

    def test_empty(self):
        with pytest.raises(InvalidInput):
            singular_values(np.zeros((0, 3)))


class TestSchmidt:
    def test_product(self):
        np.testing.assert_allclose(schmidt_decompose(basis_state(2, 2, 0, 0)).values, [1, 0])

    def test_psi_s(self):
        np.testing.assert_allclose(schmidt_decompose(psi_s()).values, [0.75, 0.25], atol=1e-12)

    def test_dicke(self):
        # rows AB=01 and AB=10 are identical (|01>+|10>)/sqrt6, rows 00 and 11 each carry 1/6
        np.testing.assert_allclose(schmidt_decompose(dicke_4_2()).values, [2 / 3, 1 / 6, 1 / 6, 0], atol=1e-12)

    def test_rank_deficient_padded(self):
        mu = schmidt_decompose(maximally_entangled(2, 5))
        assert mu.m == 2
        np.testing.assert_allclose(mu.values, [0.5, 0.5])

    def test_rejects_unnormalized(self):
        psi = PureState(2, 2, np.array([1, 0, 0, 0]))
        object.__setattr__(psi, "amplitudes", np.array([2, 0, 0, 0], dtype=complex))
        with pytest.raises(InvalidInput):
            schmidt_decompose(psi)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 3), st.integers(0, 2**31 - 1))
    def test_local_unitary_invariance(self, m, extra, seed):
        n = m + extra
        rng = np.random.default_rng(seed)
        psi = random_pure_state(m, n, rng)
        rotated = psi.apply_local(haar_unitary(m, rng), haar_unitary(n, rng))
        assert np.max(np.abs(schmidt_decompose(psi).values - schmidt_decompose(rotated).values)) < 1e-8


class TestSchmidtVector:
    def test_sorted_on_construction(self):
        np.testing.assert_allclose(SchmidtVector([0.2, 0.5, 0.3]).values, [0.5, 0.3, 0.2])

    def test_rejects_bad_sum(self):
        with pytest.raises(InvalidInput):
            SchmidtVector([0.5, 0.4])


class TestPartialTranspose:
    def test_product_state(self):
        rng = np.random.default_rng(5)
        ra = random_density_matrix(2, 2, seed=rng).matrix[:2, :2]
        ra = ra / np.trace(ra)
        rb = random_density_matrix(3, 3, seed=rng).matrix[:3, :3]
        rb = rb / np.trace(rb)
        rho = DensityMatrix(2, 3, np.kron(ra, rb))
        np.testing.assert_allclose(partial_transpose(rho), np.kron(ra, rb.T), atol=1e-14)

    def test_bell_min_eigenvalue(self):
        pt = partial_transpose(maximally_entangled(2).density_matrix())
        assert np.linalg.eigvalsh(pt)[0] == pytest.approx(-0.5, abs=1e-12)

    def test_involution_exact(self):
        rho = random_density_matrix(2, 3, seed=1)
        twice = partial_transpose(partial_transpose(rho), dims=(2, 3))
        assert np.array_equal(twice, rho.matrix)

    def test_trace_and_hermiticity(self):
        rng = np.random.default_rng(8)
        for m, n in [(2, 2), (2, 3), (3, 3), (3, 4)]:
            pt = partial_transpose(random_density_matrix(m, n, seed=rng))
            assert abs(np.trace(pt) - 1) < 1e-12
            assert np.max(np.abs(pt - pt.conj().T)) < 1e-12


class TestTraceNorm:
    def test_identity(self):
        assert trace_norm(np.eye(5)) == pytest.approx(5)

    def test_signed_diagonal(self):
        assert trace_norm(np.diag([0.5, -0.5])) == pytest.approx(1)

    def test_bell_partial_transpose(self):
        pt = partial_transpose(maximally_entangled(2).density_matrix())
        assert trace_norm(pt) == pytest.approx(2, abs=1e-12)

    def test_non_square(self):
        with pytest.raises(InvalidInput):
            trace_norm(np.ones((2, 3)))


class TestFidelity:
    def test_self(self):
        phi = random_pure_state(2, 3, seed=4)
        assert fidelity_with_pure(phi.density_matrix(), phi) == pytest.approx(1, abs=1e-12)

    def test_maximally_mixed(self):
        assert fidelity_with_pure(maximally_mixed(3, 3), maximally_entangled(3)) == pytest.approx(1 / 9)

    def test_root_fidelity_square(self):
        # for a pure target, root-fidelity 0.831 means overlap 0.831^2
        assert 0.831**2 == pytest.approx(0.690561)

    def test_dim_mismatch(self):
        with pytest.raises(InvalidInput):
            fidelity_with_pure(maximally_mixed(2, 2), maximally_entangled(3))


class TestRandom:
    def test_pure_norm(self):
        for seed in range(50):
            psi = random_pure_state(3, 4, seed)
            assert abs(np.linalg.norm(psi.amplitudes) - 1) < 1e-12

    def test_schmidt_vector(self):
        for seed in range(50):
            mu = random_schmidt_vector(5, seed)
            assert abs(mu.values.sum() - 1) < 1e-12
            assert np.all(np.diff(mu.values) <= 0)

    def test_density_matrices(self):
        for seed in range(1000):
            rng = np.random.default_rng(seed)
            m = int(rng.integers(2, 4))
            n = m + int(rng.integers(0, 2))
            rank = int(rng.integers(1, m * n + 1))
            rho = random_density_matrix(m, n, rank, rng)
            w = np.linalg.eigvalsh(rho.matrix)
            assert w[0] >= -1e-12
            assert abs(np.trace(rho.matrix) - 1) < 1e-12
            assert np.sum(w > 1e-10) == rank

    def test_deterministic(self):
        a = random_density_matrix(2, 3, 2, seed=99).matrix
        b = random_density_matrix(2, 3, 2, seed=99).matrix
        assert np.array_equal(a, b)

    def test_prefix_stable_normals(self):
        big = complex_normal(np.random.default_rng(0), (10, 3))
        small = complex_normal(np.random.default_rng(0), (4, 3))
        assert np.array_equal(big[:4], small)

    @pytest.mark.parametrize("args", [(3, 2), (0, 2)])
    def test_invalid_dims(self, args):
        with pytest.raises(InvalidInput):
            random_pure_state(*args)

    def test_invalid_rank(self):
        with pytest.raises(InvalidInput):
            random_density_matrix(2, 2, 0)


class TestHorn:
    def test_singular_value_product_inequality(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            n, p, m = rng.integers(1, 7, size=3)
            a = random_matrix(rng, n, p)
            b = random_matrix(rng, p, m)
            q = min(n, p, m)
            lhs = singular_values(a @ b)[:q].sum()
            rhs = np.sum(singular_values(a)[:q] * singular_values(b)[:q])
            assert lhs <= rhs + 1e-9

    def test_trace_below_nuclear_norm(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            d = rng.integers(1, 7)
            a = random_matrix(rng, d, d)
            assert abs(np.trace(a)) <= singular_values(a).sum() + 1e-9


class TestDensityMatrixValidation:
    def test_rejects_m_greater_than_n(self):
        with pytest.raises(InvalidInput):
            DensityMatrix(3, 2, np.eye(6) / 6)

    def test_rejects_negative(self):
        with pytest.raises(InvalidInput):
            DensityMatrix(1, 2, np.diag([1.5, -0.5]))

    def test_rejects_trace(self):
        with pytest.raises(InvalidInput):
            DensityMatrix(2, 2, np.eye(4) / 3)

    def test_rejects_non_hermitian(self):
        a = np.eye(4, dtype=complex) / 4
        a[0, 1] = 1e-6
        with pytest.raises(InvalidInput):
            DensityMatrix(2, 2, a)
