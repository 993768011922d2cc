"""Density operators, Haar-random unitaries, and random mixed states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPositive, NotUnitTrace, RankOutOfRange, ZeroVector
from .linalg import (
    DIM_CAP,
    HERMITICITY_RTOL,
    as_complex_matrix,
    dagger,
    frobenius_norm,
    hermitian_eig,
    hermitize,
)
from .rng import RngSeed, complex_gaussian

#: |Tr - 1| beyond this is a hard error; within it the trace is renormalized.
TRACE_ATOL = 1e-9

#: Eigenvalues in [-NEG_EIGENVALUE_ATOL, 0) are round-off and clamp to 0.
NEG_EIGENVALUE_ATOL = 1e-9

#: U†U may deviate from the identity by at most this much (Frobenius).
UNITARITY_ATOL = 1e-10


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, positive semidefinite, unit-trace operator.

    ``eigenvalues`` holds the occupation probabilities of the natural
    representation, sorted descending and clamped at 0; they are computed
    once at validation and reused by every entropy functional downstream.
    """

    dim: int
    matrix: np.ndarray
    eigenvalues: np.ndarray

    def __repr__(self):
        return f"DensityOperator(dim={self.dim})"


@dataclass(frozen=True, eq=False)
class Unitary:
    """Matrix with U†U = I within UNITARITY_ATOL."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_complex_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise NotHermitian(f"unitary must be square, got shape {m.shape}")
        dev = frobenius_norm(dagger(m) @ m - np.eye(m.shape[0]))
        if dev > UNITARITY_ATOL:
            raise ValueError(f"U†U deviates from identity by {dev:.3e}")
        object.__setattr__(self, "matrix", _readonly(m))
        object.__setattr__(self, "dim", m.shape[0])

    def __repr__(self):
        return f"Unitary(dim={self.dim})"


def validate_density(m) -> DensityOperator:
    """Check and normalize a candidate density matrix.

    Symmetrizes inputs within the Hermiticity guard, renormalizes the trace
    to exactly 1 when |Tr - 1| <= TRACE_ATOL, and rejects matrices whose
    smallest eigenvalue lies below -NEG_EIGENVALUE_ATOL.
    """
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotHermitian(f"density matrix must be square, got shape {a.shape}")
    norm = frobenius_norm(a)
    dev = frobenius_norm(a - dagger(a))
    if dev > HERMITICITY_RTOL * norm:
        raise NotHermitian(f"deviation from Hermiticity {dev:.3e} exceeds tolerance")
    a = hermitize(a)

    trace = float(np.trace(a).real)
    if abs(trace - 1.0) > TRACE_ATOL:
        raise NotUnitTrace(f"trace {trace!r} deviates from 1 beyond {TRACE_ATOL:.0e}")
    a = a / trace

    eig = hermitian_eig(a)
    smallest = float(eig.eigenvalues[-1])
    if smallest < -NEG_EIGENVALUE_ATOL:
        raise NotPositive(f"smallest eigenvalue {smallest:.3e} below -{NEG_EIGENVALUE_ATOL:.0e}")
    w = np.maximum(eig.eigenvalues, 0.0)

    return DensityOperator(dim=a.shape[0], matrix=_readonly(a), eigenvalues=_readonly(w))


def pure_state_density(v) -> DensityOperator:
    """Rank-1 projector |v><v| onto the normalized state vector."""
    vec = np.asarray(v, dtype=np.complex128).reshape(-1)
    if vec.size == 0:
        raise ZeroVector("empty state vector")
    if not np.all(np.isfinite(vec)):
        raise ZeroVector("state vector contains NaN or Inf entries")
    norm = np.linalg.norm(vec)
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    vec = vec / norm
    return validate_density(np.outer(vec, vec.conj()))


def maximally_mixed(dim: int) -> DensityOperator:
    """The state I/dim, the entropy maximizer."""
    return validate_density(np.eye(dim, dtype=np.complex128) / dim)


def haar_unitary(dim: int, seed: RngSeed, dim_cap: int = DIM_CAP) -> Unitary:
    """Haar-distributed random unitary.

    Ginibre matrix, QR orthonormalization, then column phases chosen so the
    triangular factor has positive real diagonal (which makes the law Haar
    rather than merely unitary).
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if dim > dim_cap:
        raise ValueError(f"dim {dim} exceeds cap {dim_cap}")
    g = complex_gaussian((dim, dim), seed.generator())
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    q = q * (d / np.abs(d))
    return Unitary(dim=dim, matrix=q)


def random_density(dim: int, rank: int, seed: RngSeed, dim_cap: int = DIM_CAP) -> DensityOperator:
    """Random mixed state GG†/Tr(GG†) from a dim x rank Ginibre factor."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if dim > dim_cap:
        raise ValueError(f"dim {dim} exceeds cap {dim_cap}")
    if not 1 <= rank <= dim:
        raise RankOutOfRange(f"rank must be in [1, {dim}], got {rank}")
    g = complex_gaussian((dim, rank), seed.generator())
    rho = g @ dagger(g)
    return validate_density(rho / np.trace(rho).real)
