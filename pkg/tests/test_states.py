import numpy as np
import pytest
from numpy.testing import assert_allclose

from entroflow.errors import NotHermitian, NotPositive, NotUnitTrace, RankOutOfRange, ZeroVector
from entroflow.measures import information
from entroflow.rng import RngSeed
from entroflow.states import (
    Unitary,
    haar_unitary,
    maximally_mixed,
    pure_state_density,
    random_density,
    validate_density,
)


class TestValidateDensity:
    def test_maximally_mixed_qubit(self):
        rho = validate_density(np.eye(2) / 2)
        assert rho.dim == 2
        assert_allclose(rho.eigenvalues, [0.5, 0.5])

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            validate_density(np.array([[1, 1], [0, 0]], dtype=complex))

    def test_rejects_bad_trace(self):
        with pytest.raises(NotUnitTrace):
            validate_density(np.diag([0.9, 0.0]))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(NotPositive):
            validate_density(np.diag([1.5, -0.5]))

    def test_renormalizes_trace_within_tolerance(self):
        rho = validate_density(np.eye(2) * (0.5 + 2e-10))
        assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-15)

    def test_clamps_roundoff_negative_eigenvalue(self):
        rho = validate_density(np.diag([1.0 + 1e-10, -1e-10]))
        assert rho.eigenvalues[-1] == 0.0

    def test_matrix_is_immutable(self):
        rho = validate_density(np.eye(2) / 2)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 0.3


class TestPureStateDensity:
    def test_basis_projector(self):
        rho = pure_state_density([1, 0])
        assert_allclose(rho.matrix, np.diag([1.0, 0.0]))

    def test_plus_state(self):
        rho = pure_state_density([1, 1])
        assert_allclose(rho.matrix, np.full((2, 2), 0.5))

    def test_circular_state(self):
        rho = pure_state_density(np.array([1, 1j]) / np.sqrt(2))
        want = np.array([[0.5, -0.5j], [0.5j, 0.5]])
        assert_allclose(rho.matrix, want, atol=1e-15)

    def test_normalizes(self):
        rho = pure_state_density([3, 4j])
        assert_allclose(np.diag(rho.matrix).real, [9 / 25, 16 / 25])

    def test_single_unit_eigenvalue(self):
        rho = pure_state_density(RngSeed(4).generator().standard_normal(5))
        assert rho.eigenvalues[0] == pytest.approx(1.0, abs=1e-12)
        assert np.all(rho.eigenvalues[1:] <= 1e-12)

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            pure_state_density([0, 0, 0])


class TestHaarUnitary:
    def test_dim_one_unit_modulus(self):
        u = haar_unitary(1, RngSeed(1))
        assert abs(abs(u.matrix[0, 0]) - 1.0) <= 1e-12

    @pytest.mark.parametrize("dim", [2, 3, 8, 16, 64])
    def test_unitarity(self, dim):
        u = haar_unitary(dim, RngSeed(100 + dim))
        dev = np.linalg.norm(u.matrix.conj().T @ u.matrix - np.eye(dim))
        assert dev <= 1e-10

    def test_corner_modulus_is_uniform(self):
        # |U_00|^2 of a Haar 2x2 unitary is uniform on [0, 1]: mean 1/2.
        vals = [abs(haar_unitary(2, RngSeed(2024, stream=k)).matrix[0, 0]) ** 2
                for k in range(2000)]
        assert abs(np.mean(vals) - 0.5) <= 0.05

    def test_deterministic(self):
        a = haar_unitary(4, RngSeed(9, stream=3)).matrix
        b = haar_unitary(4, RngSeed(9, stream=3)).matrix
        assert a.tobytes() == b.tobytes()

    def test_composes_with_dagger_to_identity(self):
        u = haar_unitary(6, RngSeed(5))
        assert np.linalg.norm(u.matrix @ u.matrix.conj().T - np.eye(6)) <= 1e-10

    def test_unitary_type_rejects_non_unitary(self):
        with pytest.raises(ValueError):
            Unitary(dim=2, matrix=np.array([[1, 0], [0, 2.0]]))


class TestRandomDensity:
    def test_rank_one_is_pure(self):
        rho = random_density(4, 1, RngSeed(12))
        assert abs(information(rho)) <= 1e-9

    def test_eigenvalues_sum_to_one(self):
        rho = random_density(2, 2, RngSeed(13))
        assert abs(rho.eigenvalues.sum() - 1.0) <= 1e-10

    def test_deterministic(self):
        a = random_density(5, 3, RngSeed(14, stream=1)).matrix
        b = random_density(5, 3, RngSeed(14, stream=1)).matrix
        assert a.tobytes() == b.tobytes()

    def test_rank_counts(self):
        for rank in (1, 2, 4):
            rho = random_density(4, rank, RngSeed(20 + rank))
            assert int(np.sum(rho.eigenvalues > 1e-9)) == rank

    def test_rank_out_of_range(self):
        with pytest.raises(RankOutOfRange):
            random_density(3, 4, RngSeed(1))
        with pytest.raises(RankOutOfRange):
            random_density(3, 0, RngSeed(1))

    @pytest.mark.parametrize("dim,rank", [(2, 2), (3, 1), (6, 4)])
    def test_outputs_revalidate(self, dim, rank):
        rho = random_density(dim, rank, RngSeed(30 + dim))
        again = validate_density(rho.matrix)
        assert_allclose(again.matrix, rho.matrix, atol=1e-14)


def test_maximally_mixed_entropy():
    rho = maximally_mixed(3)
    assert information(rho) == pytest.approx(-np.log(3), abs=1e-12)
