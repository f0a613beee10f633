import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entbound.errors import DomainError, InvalidInput, NotEntangled
from entbound.fixtures import dicke_4_2, psi_s
from entbound.linalg import (
    DensityMatrix,
    basis_state,
    haar_unitary,
    isotropic_state,
    maximally_entangled,
    maximally_mixed,
    random_density_matrix,
    random_pure_state,
)
from entbound.witness import (
    compute_lambda,
    lambda_from_fidelity,
    loo_basis,
    loo_expansion,
    loo_expectation,
    loo_reconstruct,
    loo_term_count,
    make_witness,
    witness_operator,
)


def random_product_states(m, n, count, rng):
    a = rng.standard_normal((count, m, 2)) @ [1, 1j]
    b = rng.standard_normal((count, n, 2)) @ [1, 1j]
    a /= np.linalg.norm(a, axis=1, keepdims=True)
    b /= np.linalg.norm(b, axis=1, keepdims=True)
    return np.einsum("ki,kj->kij", a, b).reshape(count, m * n)


class TestMakeWitness:
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_maximally_entangled(self, d):
        w = make_witness(maximally_entangled(d))
        np.testing.assert_allclose(w.schmidt.values, np.full(d, 1 / d), atol=1e-12)
        assert w.s1 == pytest.approx(1 / d)
        assert (w.m, w.n) == (d, d)

    def test_psi_s(self):
        w = make_witness(psi_s())
        assert w.s1 == pytest.approx(0.75)
        assert (w.m, w.n) == (2, 4)

    def test_dicke(self):
        assert make_witness(dicke_4_2()).s1 == pytest.approx(2 / 3)

    def test_product_rejected(self):
        with pytest.raises(NotEntangled):
            make_witness(basis_state(2, 2, 0, 0))


class TestLambdaFromFidelity:
    def test_exp2(self):
        assert lambda_from_fidelity(0.9821, 0.75, 2).lam == pytest.approx(0.6547, abs=1e-4)

    def test_exp3(self):
        assert lambda_from_fidelity(0.9780, 2 / 3, 4).lam == pytest.approx(0.3667, abs=1e-4)

    def test_exp1(self):
        lam = lambda_from_fidelity(0.831**2, 1 / 17, 17)
        assert lam.lam == pytest.approx(0.690561)
        assert lam.m == 17

    def test_floor(self):
        assert lambda_from_fidelity(0.3, 0.75, 2).lam == 0.5
        assert lambda_from_fidelity(0.0, 0.5, 2).lam == 0.5

    def test_clamps_top(self):
        assert lambda_from_fidelity(1 + 5e-7, 0.5, 2).lam == 1.0

    @pytest.mark.parametrize(
        "args",
        [
            (0.99, 0.3, 2),  # fid above s1*m
            (1.1, 0.5, 2),
            (-0.1, 0.5, 2),
            (0.5, 0.2, 2),  # s1 below 1/m
            (0.5, 1.2, 2),
            (0.5, 0.5, 1),
        ],
    )
    def test_domain_errors(self, args):
        with pytest.raises(DomainError):
            lambda_from_fidelity(*args)


class TestComputeLambda:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_self_witness(self, d):
        phi = maximally_entangled(d)
        assert compute_lambda(phi.density_matrix(), make_witness(phi)).lam == pytest.approx(1)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_maximally_mixed(self, d):
        w = make_witness(maximally_entangled(d))
        assert compute_lambda(maximally_mixed(d, d), w).lam == pytest.approx(1 / d)

    @pytest.mark.parametrize("d", [2, 3])
    def test_isotropic(self, d):
        w = make_witness(maximally_entangled(d))
        for p in np.linspace(0, 1, 21):
            lam = compute_lambda(isotropic_state(p, d), w).lam
            assert lam == pytest.approx(max(p + (1 - p) / d**2, 1 / d), abs=1e-12)

    def test_dimension_mismatch(self):
        w = make_witness(maximally_entangled(3))
        with pytest.raises(InvalidInput):
            compute_lambda(maximally_mixed(2, 2), w)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 3), st.integers(0, 1), st.integers(0, 2**31 - 1))
    def test_local_unitary_invariance(self, m, extra, seed):
        n = m + extra
        rng = np.random.default_rng(seed)
        phi = random_pure_state(m, n, rng)
        rho = random_density_matrix(m, n, seed=rng)
        ua, ub = haar_unitary(m, rng), haar_unitary(n, rng)
        before = compute_lambda(rho, make_witness(phi)).lam
        after = compute_lambda(rho.apply_local(ua, ub), make_witness(phi.apply_local(ua, ub))).lam
        assert abs(before - after) < 1e-10


class TestWitnessOperator:
    def test_bell(self):
        phi = maximally_entangled(2)
        np.testing.assert_allclose(witness_operator(make_witness(phi)), np.eye(4) / 2 - phi.projector(), atol=1e-15)

    def test_negative_on_phi(self):
        phi = random_pure_state(3, 3, seed=1)
        w = make_witness(phi)
        val = np.vdot(phi.amplitudes, witness_operator(w) @ phi.amplitudes).real
        assert val == pytest.approx(w.s1 - 1, abs=1e-12)
        assert val <= 0

    @pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (4, 4)])
    def test_nonnegative_on_products(self, m, n):
        rng = np.random.default_rng(10 * m + n)
        w = make_witness(random_pure_state(m, n, rng))
        op = witness_operator(w)
        prods = random_product_states(m, n, 10000, rng)
        vals = np.einsum("ki,ij,kj->k", prods.conj(), op, prods).real
        assert vals.min() >= -1e-9

    def test_hermitian(self):
        op = witness_operator(make_witness(psi_s()))
        assert np.allclose(op, op.conj().T)


class TestLOOBasis:
    @pytest.mark.parametrize("d", [2, 3, 4, 7])
    def test_orthonormal_and_hermitian(self, d):
        ops = loo_basis(d)
        assert len(ops) == d * d
        gram = np.array([[np.trace(a @ b) for b in ops] for a in ops])
        np.testing.assert_allclose(gram, np.eye(d * d), atol=1e-12)
        for g in ops:
            np.testing.assert_allclose(g, g.conj().T)

    def test_d2_structure(self):
        ops = loo_basis(2)
        np.testing.assert_allclose(ops[2], np.array([[0, 1], [1, 0]]) / np.sqrt(2))
        np.testing.assert_allclose(ops[3], np.array([[0, -1j], [1j, 0]]) / np.sqrt(2))

    def test_completeness(self):
        rng = np.random.default_rng(0)
        a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        h = a + a.conj().T
        rebuilt = sum(np.trace(g @ h) * g for g in loo_basis(3))
        assert np.max(np.abs(rebuilt - h)) < 1e-10

    def test_rejects_small(self):
        with pytest.raises(InvalidInput):
            loo_basis(1)

    def test_term_count(self):
        assert loo_term_count(17) == 289


class TestLOOExpansion:
    def test_bell_coefficients(self):
        terms = loo_expansion(make_witness(maximally_entangled(2)))
        assert len(terms) == 4
        np.testing.assert_allclose(np.abs([t.coefficient for t in terms]), 0.5, atol=1e-12)

    @pytest.mark.parametrize("m,n", [(2, 2), (3, 3), (4, 4), (2, 3), (2, 4), (3, 5)])
    def test_reconstruction(self, m, n):
        phi = random_pure_state(m, n, seed=m * 10 + n)
        terms = loo_expansion(make_witness(phi))
        assert len(terms) == m * m
        assert np.max(np.abs(loo_reconstruct(terms) - phi.projector())) < 1e-9

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_coefficient_multiset(self, d):
        w = make_witness(random_pure_state(d, d, seed=d))
        s = w.schmidt.values
        expected = list(s)
        for a in range(d):
            for b in range(a + 1, d):
                expected += [np.sqrt(s[a] * s[b])] * 2
        got = np.abs([t.coefficient for t in loo_expansion(w)])
        np.testing.assert_allclose(np.sort(got), np.sort(expected), atol=1e-9)

    def test_psi_s_and_dicke(self):
        for phi in (psi_s(), dicke_4_2()):
            terms = loo_expansion(make_witness(phi))
            assert np.max(np.abs(loo_reconstruct(terms) - phi.projector())) < 1e-9

    @pytest.mark.parametrize("m,n", [(2, 2), (3, 3), (4, 4), (2, 3)])
    def test_expectation_matches_fidelity(self, m, n):
        rng = np.random.default_rng(m + 7 * n)
        for _ in range(20):
            phi = random_pure_state(m, n, rng)
            rho = random_density_matrix(m, n, seed=rng)
            terms = loo_expansion(make_witness(phi))
            direct = np.vdot(phi.amplitudes, rho.matrix @ phi.amplitudes).real
            assert abs(loo_expectation(rho, terms) - direct) < 1e-8

    def test_local_operators_hermitian(self):
        for t in loo_expansion(make_witness(random_pure_state(3, 4, seed=3))):
            np.testing.assert_allclose(t.op_a, t.op_a.conj().T, atol=1e-12)
            np.testing.assert_allclose(t.op_b, t.op_b.conj().T, atol=1e-12)

    def test_expectation_on_density_matrix_type(self):
        rho = DensityMatrix(2, 2, np.eye(4) / 4)
        terms = loo_expansion(make_witness(maximally_entangled(2)))
        assert loo_expectation(rho, terms) == pytest.approx(0.25)
