import numpy as np
import pytest
from numpy.testing import assert_allclose

from entroflow.errors import DimensionOverflow, NoConvergence, NotHermitian, ShapeMismatch
from entroflow.linalg import frobenius_distance, hermitian_eig, kron
from entroflow.rng import RngSeed, complex_gaussian


def random_hermitian(dim, seed):
    g = complex_gaussian((dim, dim), RngSeed(seed).generator())
    return (g + g.conj().T) / 2


class TestHermitianEig:
    def test_identity(self):
        eig = hermitian_eig(np.eye(2))
        assert_allclose(eig.eigenvalues, [1.0, 1.0])
        assert_allclose(eig.eigenvectors.conj().T @ eig.eigenvectors, np.eye(2), atol=1e-12)

    def test_pauli_x(self):
        eig = hermitian_eig(np.array([[0, 1], [1, 0]], dtype=complex))
        assert_allclose(eig.eigenvalues, [1.0, -1.0], atol=1e-12)

    def test_reconstruction_seeded_6x6(self):
        m = random_hermitian(6, seed=601)
        eig = hermitian_eig(m)
        assert np.max(np.abs(eig.reconstruct() - m)) <= 1e-9

    @pytest.mark.parametrize("dim", [2, 3, 5, 8, 16, 33, 64])
    def test_invariants_up_to_64(self, dim):
        m = random_hermitian(dim, seed=700 + dim)
        norm = np.linalg.norm(m)
        eig = hermitian_eig(m)
        v = eig.eigenvectors
        assert np.linalg.norm(v.conj().T @ v - np.eye(dim)) <= 1e-10
        assert np.linalg.norm(eig.reconstruct() - m) <= 1e-9 * norm
        assert abs(eig.eigenvalues.sum() - np.trace(m).real) <= 1e-10 * norm

    def test_eigenvalues_sorted_descending(self):
        eig = hermitian_eig(random_hermitian(10, seed=11))
        assert np.all(np.diff(eig.eigenvalues) <= 0)

    def test_hermitization_guard_absorbs_roundoff(self):
        m = random_hermitian(4, seed=5)
        skewed = m + 1e-12 * np.ones((4, 4))
        eig = hermitian_eig(skewed)
        assert np.linalg.norm(eig.reconstruct() - m) <= 1e-9

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_rejects_non_square(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.zeros((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(ShapeMismatch):
            hermitian_eig(np.array([[np.nan, 0], [0, 1.0]]))

    def test_no_convergence_with_zero_sweep_budget(self):
        with pytest.raises(NoConvergence):
            hermitian_eig(random_hermitian(4, seed=3), max_sweeps=0)

    def test_dim_one(self):
        eig = hermitian_eig(np.array([[2.5]]))
        assert_allclose(eig.eigenvalues, [2.5])


class TestKron:
    def test_identity(self):
        assert_allclose(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_diagonal(self):
        got = kron(np.diag([1.0, 2.0]), np.diag([3.0, 4.0]))
        assert_allclose(got, np.diag([3.0, 4.0, 6.0, 8.0]))

    def test_entry_layout(self):
        a = np.arange(4).reshape(2, 2) + 0j
        b = np.arange(4, 8).reshape(2, 2) + 0j
        got = kron(a, b)
        for ia in range(2):
            for ja in range(2):
                for ib in range(2):
                    for jb in range(2):
                        assert got[ia * 2 + ib, ja * 2 + jb] == a[ia, ja] * b[ib, jb]

    def test_mixed_product_property(self):
        rng = RngSeed(77).generator()
        a, b, c, d = (complex_gaussian((2, 2), rng) for _ in range(4))
        left = kron(a, b) @ kron(c, d)
        right = kron(a @ c, b @ d)
        assert np.max(np.abs(left - right)) <= 1e-12

    def test_associativity(self):
        rng = RngSeed(78).generator()
        for _ in range(20):
            a = complex_gaussian((2, 2), rng)
            b = complex_gaussian((3, 2), rng)
            c = complex_gaussian((2, 3), rng)
            left = kron(kron(a, b), c)
            right = kron(a, kron(b, c))
            assert np.max(np.abs(left - right)) <= 1e-12

    def test_dimension_overflow(self):
        with pytest.raises(DimensionOverflow):
            kron(np.eye(2), np.eye(3), dim_cap=5)


class TestFrobeniusDistance:
    def test_self_distance_zero(self):
        m = random_hermitian(3, seed=1)
        assert frobenius_distance(m, m) == 0.0

    def test_identity_to_zero(self):
        assert frobenius_distance(np.eye(2), np.zeros((2, 2))) == pytest.approx(np.sqrt(2))

    def test_triangle_inequality(self):
        rng = RngSeed(79).generator()
        a, b, c = (complex_gaussian((4, 4), rng) for _ in range(3))
        assert frobenius_distance(a, c) <= (
            frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-12
        )

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            frobenius_distance(np.eye(2), np.eye(3))


class TestBackends:
    def test_backend_name(self):
        from entroflow._backend import BACKEND

        assert BACKEND in ("cython", "python")

    def test_kernels_agree(self):
        from entroflow import _jacobi_py

        cy = pytest.importorskip("entroflow._jacobi_cy")
        for dim in (2, 7, 16):
            m = random_hermitian(dim, seed=900 + dim)
            w_py, v_py, _, ok_py = _jacobi_py.jacobi_eigh(m, 1e-12, 100)
            w_cy, v_cy, _, ok_cy = cy.jacobi_eigh(m, 1e-12, 100)
            assert ok_py and ok_cy
            assert np.max(np.abs(np.sort(w_py) - np.sort(w_cy))) <= 1e-12
            for w, v in ((w_py, v_py), (w_cy, v_cy)):
                rec = (v * w) @ v.conj().T
                assert np.linalg.norm(rec - m) <= 1e-10 * np.linalg.norm(m)

    def test_fallback_converges_on_collapse_products(self):
        # regression: measuring the off-norm as ||A||^2 - ||diag||^2 cancels
        # catastrophically and stalled on matrices from this exact pipeline
        from entroflow import _jacobi_py
        from entroflow.composite import Partition, collapse_to_product
        from entroflow.dynamics import evolve, random_hamiltonian
        from entroflow.states import pure_state_density

        p = Partition((2, 2))
        for stream in range(25):
            seed = RngSeed(911, stream=stream)
            rho = collapse_to_product(
                pure_state_density(complex_gaussian(4, seed.generator())), p)
            h = random_hamiltonian(p, 1.0, 1.0, seed.child(5))
            rho = collapse_to_product(evolve(rho, h, 1.0), p)
            w, v, sweeps, converged = _jacobi_py.jacobi_eigh(rho.matrix, 1e-12, 100)
            assert converged, f"stream {stream} stalled after {sweeps} sweeps"
