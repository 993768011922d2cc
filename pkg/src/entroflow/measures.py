"""Information and entropy functionals of density operators.

All logarithms are natural, so information is measured in nats and the
entropy of a part is -k_B times its information. Boltzmann's constant is a
plain scale factor, default 1, making S and -I numerically identical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .composite import Partition, partial_trace
from .errors import DimensionMismatch, NotPositive, PartitionMismatch
from .linalg import as_complex_matrix, dagger, frobenius_norm
from .states import DensityOperator

#: Occupation probabilities at or below this contribute 0 to sum(w ln w),
#: the continuous extension of x ln x at the origin.
EIGENVALUE_FLOOR = 1e-12

#: Diagonal probabilities in [-PROBABILITY_CLAMP, 0) clamp to 0.
PROBABILITY_CLAMP = 1e-12


def sum_w_ln_w(weights) -> float:
    """sum of w ln w over the entries above EIGENVALUE_FLOOR."""
    w = np.asarray(weights, dtype=np.float64)
    w = w[w > EIGENVALUE_FLOOR]
    if w.size == 0:
        return 0.0
    return float(np.sum(w * np.log(w)))


def information(rho: DensityOperator) -> float:
    """Tr(rho ln rho) via the natural-representation probabilities.

    Lies in [-ln dim, 0]; zero exactly for pure states.
    """
    return sum_w_ln_w(rho.eigenvalues)


@dataclass(frozen=True, eq=False)
class EntropyReport:
    """Part-wise entropies S_i = -k_B Tr(rho_i ln rho_i) and their sum."""

    per_part: tuple[float, ...]
    total: float
    k_B: float
    information_sum: float


def entropy_of_partition(rho: DensityOperator, p: Partition, k_B: float = 1.0) -> EntropyReport:
    """Measure the extensive entropy: sum of the parts' marginal entropies."""
    if rho.dim != p.total:
        raise PartitionMismatch(f"operator dim {rho.dim} != partition total {p.total}")
    if k_B <= 0.0:
        raise ValueError(f"k_B must be positive, got {k_B}")
    infos = [information(partial_trace(rho, p, {i})) for i in range(p.parts)]
    information_sum = float(sum(infos))
    return EntropyReport(
        per_part=tuple(-k_B * x for x in infos),
        total=-k_B * information_sum,
        k_B=k_B,
        information_sum=information_sum,
    )


@dataclass(frozen=True, eq=False)
class ObservableBasis:
    """Orthonormal measurement basis, one state per column."""

    dim: int
    vectors: np.ndarray

    def __post_init__(self):
        v = as_complex_matrix(self.vectors)
        if v.shape[0] != v.shape[1]:
            raise ValueError(f"basis must be square, got shape {v.shape}")
        dev = frobenius_norm(dagger(v) @ v - np.eye(v.shape[0]))
        if dev > 1e-10:
            raise ValueError(f"columns deviate from orthonormality by {dev:.3e}")
        v = np.ascontiguousarray(v)
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "dim", v.shape[0])


def basis_information(rho: DensityOperator, basis: ObservableBasis) -> float:
    """Information about one particular complete measurement.

    The outcome probabilities are <m|rho|m>; their sum of w ln w can never
    exceed the basis-free information of the state.
    """
    if basis.dim != rho.dim:
        raise DimensionMismatch(f"basis dim {basis.dim} != state dim {rho.dim}")
    v = basis.vectors
    probs = np.einsum("im,ij,jm->m", v.conj(), rho.matrix, v).real
    if np.any(probs < -PROBABILITY_CLAMP):
        raise NotPositive(f"outcome probability {probs.min():.3e} below -{PROBABILITY_CLAMP:.0e}")
    probs = np.maximum(probs, 0.0)
    return sum_w_ln_w(probs)


def correlation_information(rho: DensityOperator, p: Partition) -> float:
    """Information stored in correlations between parts: I - sum_i I_i >= 0.

    Zero exactly when the state factorizes into a product over the parts;
    this is what a part-wise entropy measurement surrenders.
    """
    if p.parts < 2:
        raise PartitionMismatch(f"need at least 2 parts, got {p.parts}")
    if rho.dim != p.total:
        raise PartitionMismatch(f"operator dim {rho.dim} != partition total {p.total}")
    marginal_sum = sum(information(partial_trace(rho, p, {i})) for i in range(p.parts))
    return information(rho) - float(marginal_sum)
