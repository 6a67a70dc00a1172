import numpy as np
import pytest

import dirlap.linalg as linalg
from dirlap.errors import DimensionMismatch, NoConvergence, NotHermitian
from dirlap.linalg import (
    commutator,
    frobenius_norm,
    hermitian_eigendecomposition,
    hermitian_eigenvalues,
    pauli,
)

from helpers import pauli_block_matrix, random_hermitian


class TestPauli:
    def test_matrices_match_convention(self):
        assert np.array_equal(pauli("sigma0"), np.eye(2))
        assert np.array_equal(pauli("sigmaX"), np.array([[0, 1], [1, 0]]))
        assert np.array_equal(pauli("sigmaY"), np.array([[0, -1j], [1j, 0]]))
        assert pauli("sigmaZ")[1, 1] == -1

    def test_involution_and_hermiticity(self):
        for kind in linalg.PAULI_KINDS:
            s = pauli(kind)
            assert np.array_equal(s @ s, np.eye(2))
            assert np.array_equal(s, s.conj().T)

    def test_unknown_kind(self):
        with pytest.raises(DimensionMismatch):
            pauli("sigmaW")

    def test_returns_copy(self):
        a = pauli("sigmaX")
        a[0, 0] = 7.0
        assert pauli("sigmaX")[0, 0] == 0


class TestCommutator:
    def test_pauli_algebra(self):
        assert np.allclose(commutator(pauli("sigmaX"), pauli("sigmaY")), 2j * pauli("sigmaZ"))

    def test_self_commutation(self):
        m = random_hermitian(5, seed=1)
        assert np.all(commutator(m, m) == 0)

    def test_antisymmetry_exact(self):
        rng = np.random.default_rng(2)
        a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        b = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        assert np.array_equal(commutator(a, b), -commutator(b, a))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            commutator(np.eye(2), np.eye(3))
        with pytest.raises(DimensionMismatch):
            commutator(np.ones((2, 3)), np.ones((2, 3)))


class TestFrobeniusNorm:
    def test_zero(self):
        assert frobenius_norm(np.zeros((2, 2))) == 0.0

    def test_unit_entries(self):
        assert frobenius_norm(pauli("sigma0")) == pytest.approx(np.sqrt(2), abs=0)
        assert frobenius_norm(pauli("sigmaY")) == pytest.approx(np.sqrt(2), abs=0)

    def test_empty(self):
        assert frobenius_norm(np.zeros((0, 0))) == 0.0


class TestEigendecomposition:
    def test_diagonal(self):
        w, v = hermitian_eigendecomposition(pauli("sigmaZ"))
        assert np.allclose(w, [-1.0, 1.0])
        assert np.allclose(np.abs(v.conj().T @ v), np.eye(2))

    def test_two_by_two_by_hand(self):
        # characteristic polynomial (lambda - 2)^2 - 1 = 0
        m = np.array([[2.0, 1j], [-1j, 2.0]])
        w, _ = hermitian_eigendecomposition(m)
        assert np.allclose(w, [1.0, 3.0], atol=1e-12)

    def test_phase_block_operator_spectrum(self):
        # scalar circulant-like part [[2,-1,1],[-1,2,-1],[1,-1,2]] tensored
        # with the identity: eigenvalues 1, 1, 4, doubled
        s0 = np.eye(2)
        m = pauli_block_matrix(
            [[2 * s0, -s0, s0], [-s0, 2 * s0, -s0], [s0, -s0, 2 * s0]]
        )
        w = hermitian_eigenvalues(m)
        assert np.allclose(w, [1, 1, 1, 1, 4, 4], atol=1e-10)

    @pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 33])
    def test_reconstruction_and_residuals(self, n):
        m = random_hermitian(n, seed=n)
        scale = frobenius_norm(m)
        w, v = hermitian_eigendecomposition(m)
        assert np.all(np.diff(w) >= 0)
        assert w.dtype.kind == "f"
        assert frobenius_norm(v @ np.diag(w) @ v.conj().T - m) <= 1e-8 * scale
        assert frobenius_norm(v.conj().T @ v - np.eye(n)) <= 1e-8
        assert frobenius_norm(m @ v - v * w[None, :]) <= 1e-8 * scale

    @pytest.mark.parametrize("n", [2, 5, 12, 30])
    def test_against_reference_solver(self, n):
        m = random_hermitian(n, seed=100 + n)
        w = hermitian_eigenvalues(m)
        ref = np.linalg.eigvalsh(m)
        assert np.max(np.abs(w - ref)) <= 1e-9 * max(1.0, frobenius_norm(m))

    def test_degenerate_spectrum(self):
        rng = np.random.default_rng(5)
        q, _ = np.linalg.qr(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)))
        target = np.array([1.0, 1.0, 1.0, 2.0, 2.0, 3.0])
        m = q @ np.diag(target) @ q.conj().T
        m = (m + m.conj().T) / 2
        w, v = hermitian_eigendecomposition(m)
        assert np.allclose(w, target, atol=1e-10)
        assert frobenius_norm(v.conj().T @ v - np.eye(6)) <= 1e-8
        assert frobenius_norm(m @ v - v * w[None, :]) <= 1e-8 * frobenius_norm(m)

    def test_large_multiplicity_clusters(self):
        rng = np.random.default_rng(17)
        target = np.repeat([1.0, 2.0, 5.0], [3, 5, 8])
        n = target.size
        q, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        m = q @ np.diag(target) @ q.conj().T
        m = (m + m.conj().T) / 2
        w, v = hermitian_eigendecomposition(m)
        assert np.allclose(w, target, atol=1e-10)
        assert frobenius_norm(v.conj().T @ v - np.eye(n)) <= 1e-8
        assert frobenius_norm(m @ v - v * w[None, :]) <= 1e-8 * frobenius_norm(m)

    def test_structured_degenerate_operator(self):
        # phase-coupled operator on a 27-edge complex: 54 eigenvalues in 9
        # distinct groups, exercising the cluster complexification at scale
        from dirlap.connection import connection_1up
        from dirlap.generators import TorusSpec, triangulated_torus

        m = connection_1up(triangulated_torus(TorusSpec(3, 3, 1)), 1.0).matrix
        w, v = hermitian_eigendecomposition(m)
        assert np.unique(np.round(w, 8)).size == 9
        assert frobenius_norm(v.conj().T @ v - np.eye(54)) <= 1e-8
        assert frobenius_norm(m @ v - v * w[None, :]) <= 1e-8 * frobenius_norm(m)
        assert np.max(np.abs(w - np.linalg.eigvalsh(m))) <= 1e-10 * frobenius_norm(m)

    def test_zero_and_empty(self):
        w, v = hermitian_eigendecomposition(np.zeros((3, 3)))
        assert np.array_equal(w, np.zeros(3))
        assert frobenius_norm(v.conj().T @ v - np.eye(3)) <= 1e-12
        w, v = hermitian_eigendecomposition(np.zeros((0, 0)))
        assert w.size == 0 and v.size == 0

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eigendecomposition(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(NotHermitian):
            hermitian_eigendecomposition(np.ones((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(NotHermitian):
            hermitian_eigendecomposition(np.array([[np.nan, 0.0], [0.0, 1.0]]))
        with pytest.raises(NotHermitian):
            hermitian_eigendecomposition(np.array([[np.inf, 0.0], [0.0, 1.0]]))

    def test_accepts_tiny_asymmetry(self):
        m = random_hermitian(4, seed=9)
        m[0, 1] += 1e-13
        w = hermitian_eigenvalues(m)
        assert np.all(np.isfinite(w))

    def test_no_convergence_when_sweeps_exhausted(self, monkeypatch):
        monkeypatch.setattr(linalg, "JACOBI_MAX_SWEEPS", 0)
        with pytest.raises(NoConvergence):
            hermitian_eigenvalues(random_hermitian(4, seed=3))
