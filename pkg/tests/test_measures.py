import numpy as np
import pytest
from numpy.testing import assert_allclose

from entroflow.composite import Partition, partial_trace, tensor_product_state
from entroflow.errors import DimensionMismatch, PartitionMismatch
from entroflow.linalg import hermitian_eig
from entroflow.measures import (
    ObservableBasis,
    basis_information,
    correlation_information,
    entropy_of_partition,
    information,
)
from entroflow.oracles import information_matrix_log, naive_partial_trace
from entroflow.rng import RngSeed
from entroflow.states import haar_unitary, pure_state_density, random_density, validate_density

BELL = pure_state_density([1, 0, 0, 1])


class TestInformation:
    def test_pure_state_zero(self):
        rho = pure_state_density(RngSeed(60).generator().standard_normal(6))
        assert abs(information(rho)) <= 1e-9

    def test_maximally_mixed_qubit(self):
        rho = validate_density(np.eye(2) / 2)
        assert information(rho) == pytest.approx(-np.log(2), abs=1e-12)

    def test_three_quarters(self):
        rho = validate_density(np.diag([0.75, 0.25]))
        want = 0.75 * np.log(0.75) + 0.25 * np.log(0.25)  # -0.5623351446188083
        assert information(rho) == pytest.approx(want, abs=1e-12)
        assert information(rho) == pytest.approx(-0.5623351446188083, abs=1e-9)

    @pytest.mark.parametrize("dim", [2, 3, 8, 16])
    def test_range(self, dim):
        rho = random_density(dim, dim, RngSeed(61, stream=dim))
        val = information(rho)
        assert -np.log(dim) - 1e-9 <= val <= 1e-9

    @pytest.mark.parametrize("dim", [2, 8, 64])
    def test_unitary_invariance(self, dim):
        rho = random_density(dim, dim, RngSeed(62, stream=dim))
        u = haar_unitary(dim, RngSeed(63, stream=dim))
        rotated = validate_density(u.matrix @ rho.matrix @ u.matrix.conj().T)
        assert abs(information(rotated) - information(rho)) <= 1e-8

    @pytest.mark.parametrize("dim", [2, 6, 16])
    def test_matches_matrix_log_oracle(self, dim):
        rho = random_density(dim, dim, RngSeed(64, stream=dim))
        assert abs(information(rho) - information_matrix_log(rho.matrix)) <= 1e-8


class TestEntropyOfPartition:
    def test_pure_product_is_zero(self):
        qubit = pure_state_density([1, 1j])
        joint = tensor_product_state([qubit, qubit])
        report = entropy_of_partition(joint, Partition((2, 2)))
        assert abs(report.total) <= 1e-9

    def test_bell_is_two_ln_two(self):
        report = entropy_of_partition(BELL, Partition((2, 2)), k_B=1.0)
        assert report.total == pytest.approx(2 * np.log(2), abs=1e-12)
        assert_allclose(report.per_part, [np.log(2), np.log(2)], atol=1e-12)

    def test_matches_brute_force(self):
        # independent path: naive partial trace + LAPACK eigenvalues + bare sum
        p = Partition((2, 2))
        rho = random_density(4, 4, RngSeed(65))
        report = entropy_of_partition(rho, p)
        total = 0.0
        for i in range(2):
            red = naive_partial_trace(rho.matrix, (2, 2), {i})
            w = np.linalg.eigvalsh(red)
            total -= sum(x * np.log(x) for x in w if x > 1e-12)
        assert report.total == pytest.approx(total, abs=1e-9)

    def test_total_ties_to_information_sum(self):
        p = Partition((2, 3))
        rho = random_density(6, 6, RngSeed(66))
        report = entropy_of_partition(rho, p, k_B=2.5)
        assert abs(report.total - (-2.5 * report.information_sum)) <= 1e-12
        assert all(s >= -1e-9 for s in report.per_part)

    def test_k_b_scales(self):
        rho = random_density(4, 4, RngSeed(67))
        p = Partition((2, 2))
        one = entropy_of_partition(rho, p, k_B=1.0)
        two = entropy_of_partition(rho, p, k_B=2.0)
        assert two.total == pytest.approx(2 * one.total, rel=1e-12)

    def test_partition_mismatch(self):
        with pytest.raises(PartitionMismatch):
            entropy_of_partition(BELL, Partition((2, 3)))


class TestBasisInformation:
    def test_eigenbasis_recovers_information(self):
        rho = random_density(4, 4, RngSeed(68))
        basis = ObservableBasis(4, hermitian_eig(rho.matrix).eigenvectors)
        assert basis_information(rho, basis) == pytest.approx(information(rho), abs=1e-9)

    def test_bell_in_product_basis(self):
        basis = ObservableBasis(4, np.eye(4))
        got = basis_information(BELL, basis)
        assert got == pytest.approx(-np.log(2), abs=1e-12)
        assert got <= information(BELL) + 1e-8

    @pytest.mark.parametrize("trial", range(10))
    def test_never_exceeds_information(self, trial):
        rho = random_density(4, 4, RngSeed(69, stream=trial))
        basis = ObservableBasis(4, haar_unitary(4, RngSeed(70, stream=trial)).matrix)
        assert basis_information(rho, basis) <= information(rho) + 1e-8

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            basis_information(BELL, ObservableBasis(2, np.eye(2)))

    def test_basis_requires_orthonormal_columns(self):
        with pytest.raises(ValueError):
            ObservableBasis(2, np.array([[1.0, 1.0], [0.0, 0.0]]))


class TestCorrelationInformation:
    def test_product_state_zero(self):
        rho_a = random_density(2, 2, RngSeed(71))
        rho_b = random_density(3, 3, RngSeed(72))
        joint = tensor_product_state([rho_a, rho_b])
        assert abs(correlation_information(joint, Partition((2, 3)))) <= 1e-8

    def test_bell_two_ln_two(self):
        got = correlation_information(BELL, Partition((2, 2)))
        assert got == pytest.approx(2 * np.log(2), abs=1e-9)

    @pytest.mark.parametrize("trial", range(10))
    def test_nonnegative_three_parts(self, trial):
        rho = random_density(8, 8, RngSeed(73, stream=trial))
        assert correlation_information(rho, Partition((2, 2, 2))) >= -1e-8

    def test_needs_two_parts(self):
        rho = random_density(4, 4, RngSeed(74))
        with pytest.raises(PartitionMismatch):
            correlation_information(rho, Partition((4,)))

    def test_telescopes_over_recursive_bipartition(self):
        # I - sum_i I_i equals the bipartite gap applied twice: (0|12) then (1|2)
        p = Partition((2, 2, 2))
        rho = random_density(8, 8, RngSeed(75))
        direct = correlation_information(rho, p)
        rest = partial_trace(rho, p, {1, 2})
        first = correlation_information(rho, Partition((2, 4)))
        second = correlation_information(rest, Partition((2, 2)))
        assert direct == pytest.approx(first + second, abs=1e-9)
