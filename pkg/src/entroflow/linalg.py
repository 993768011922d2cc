"""Dense complex linear algebra substrate.

Matrices are numpy ``complex128`` arrays in row-major order. The Hermitian
eigensolver is a cyclic Jacobi iteration (compiled kernel when available,
numpy fallback otherwise); everything downstream consumes it through
:func:`hermitian_eig`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import jacobi_eigh
from .errors import DimensionOverflow, NoConvergence, NotHermitian, ShapeMismatch

#: Hard cap on any matrix dimension produced by this package.
DIM_CAP = 4096

#: Inputs within this relative deviation from M† are symmetrized, not rejected.
HERMITICITY_RTOL = 1e-9

#: Default relative off-diagonal target for the Jacobi iteration.
EIG_TOL = 1e-12

#: Jacobi sweep budget before NoConvergence.
MAX_SWEEPS = 100


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting non-finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ShapeMismatch("matrix contains NaN or Inf entries")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def hermitize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (M + M†)/2, absorbing round-off drift."""
    return (m + dagger(m)) / 2.0


def frobenius_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def frobenius_distance(a, b) -> float:
    """||A - B||_F; zero iff the matrices are elementwise equal."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def kron(a, b, dim_cap: int = DIM_CAP) -> np.ndarray:
    """Kronecker product realizing the product basis |n_a n_b> = |n_a>|n_b>.

    Entry ((ia*rows_b + ib), (ja*cols_b + jb)) equals A[ia, ja] * B[ib, jb].
    """
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > dim_cap or cols > dim_cap:
        raise DimensionOverflow(f"product dimension {rows}x{cols} exceeds cap {dim_cap}")
    return np.kron(a, b)


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Spectral factorization M = V diag(w) V† of a Hermitian matrix.

    ``eigenvalues`` are real and sorted descending; among equal eigenvalues
    the order is unspecified. ``eigenvectors`` holds the orthonormal
    eigenvectors as columns, matching the eigenvalue order.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int

    def reconstruct(self) -> np.ndarray:
        """V diag(w) V†."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ dagger(v)


def hermitian_eig(m, tol: float = EIG_TOL, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    The input must be square and Hermitian within ``HERMITICITY_RTOL``
    (relative Frobenius); it is symmetrized before iterating. Convergence is
    declared when the off-diagonal Frobenius norm falls below
    ``tol * ||M||_F`` within ``max_sweeps`` sweeps.
    """
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotHermitian(f"matrix is not square: shape {a.shape}")
    norm = frobenius_norm(a)
    dev = frobenius_norm(a - dagger(a))
    if dev > HERMITICITY_RTOL * norm:
        raise NotHermitian(
            f"deviation from Hermiticity {dev:.3e} exceeds "
            f"{HERMITICITY_RTOL:.0e} x ||M||"
        )
    a = hermitize(a)

    w, v, sweeps, converged = jacobi_eigh(a, tol, max_sweeps)
    if not converged:
        raise NoConvergence(f"Jacobi did not converge within {max_sweeps} sweeps")

    order = np.argsort(-w, kind="stable")
    w = np.ascontiguousarray(w[order])
    v = np.ascontiguousarray(v[:, order])
    w.setflags(write=False)
    v.setflags(write=False)
    return EigenDecomposition(eigenvalues=w, eigenvectors=v, sweeps=int(sweeps))
