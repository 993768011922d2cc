"""Independent slow paths used to cross-check the production routines.

Nothing here shares code with the implementations it audits: the partial
trace is an explicit double loop over basis indices with its own index
arithmetic, and the information functional goes through a LAPACK-based
matrix logarithm instead of the package's Jacobi eigenvalues.
"""

from __future__ import annotations

import numpy as np

from .measures import EIGENVALUE_FLOOR


def _decode(n: int, dims) -> list:
    """Big-endian mixed-radix digits of n, written out longhand."""
    digits = []
    for d in reversed(dims):
        digits.append(n % d)
        n //= d
    digits.reverse()
    return digits


def naive_partial_trace(matrix: np.ndarray, dims, keep) -> np.ndarray:
    """Partial trace by brute-force summation over explicit basis indices."""
    dims = [int(d) for d in dims]
    kept = sorted(set(int(i) for i in keep))
    traced = [i for i in range(len(dims)) if i not in kept]
    total = 1
    for d in dims:
        total *= d
    dk = 1
    for i in kept:
        dk *= dims[i]

    out = np.zeros((dk, dk), dtype=np.complex128)
    for row in range(total):
        rdig = _decode(row, dims)
        for col in range(total):
            cdig = _decode(col, dims)
            if any(rdig[t] != cdig[t] for t in traced):
                continue
            r_out = 0
            c_out = 0
            for i in kept:
                r_out = r_out * dims[i] + rdig[i]
                c_out = c_out * dims[i] + cdig[i]
            out[r_out, c_out] += matrix[row, col]
    return out


def information_matrix_log(matrix: np.ndarray) -> float:
    """Tr(rho ln rho) through an explicit matrix logarithm.

    Eigenvalues are floored at EIGENVALUE_FLOOR inside the log; the floored
    directions carry weight at most the floor, so they contribute O(1e-11).
    """
    w, v = np.linalg.eigh(matrix)
    w = np.maximum(w, EIGENVALUE_FLOOR)
    log_rho = (v * np.log(w)) @ v.conj().T
    return float(np.trace(matrix @ log_rho).real)
