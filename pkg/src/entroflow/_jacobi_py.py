"""Cyclic complex Jacobi eigensolver, pure numpy.

Reference semantics for the compiled kernel in ``_jacobi_cy``: both apply the
same rotation sequence, so either backend satisfies the same tolerances.

Each rotation zeroes one off-diagonal pair (p, q). Writing
``a[p, q] = |a| exp(i theta)``, the phase ``exp(i theta)`` reduces the 2x2
block to the real symmetric case, which the classic tangent-based rotation
diagonalizes; the combined unitary acts as

    row p <- c e^{-i theta} row p - s row q       col p <- c e^{i theta} col p - s col q
    row q <- s e^{-i theta} row p + c row q       col q <- s e^{i theta} col p + c col q
"""

from __future__ import annotations

import numpy as np


def jacobi_eigh(matrix: np.ndarray, tol: float, max_sweeps: int):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors, sweeps, converged)`` with the
    eigenvalues in diagonal (unsorted) order and the eigenvectors as columns.
    Convergence: off-diagonal Frobenius norm <= tol * ||matrix||_F.
    """
    a = np.array(matrix, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    norm = np.linalg.norm(a)
    if n == 1 or norm == 0.0:
        return np.diag(a).real.copy(), v, 0, True

    thresh = tol * norm
    # Pairs below skip cannot by themselves push the off-norm above thresh.
    skip = thresh / n
    # Direct off-diagonal sum: computing it as ||A||^2 - ||diag||^2 cancels
    # catastrophically and can never certify a 1e-12 relative target.
    off_mask = ~np.eye(n, dtype=bool)

    for sweep in range(1, max_sweeps + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                absa = abs(apq)
                if absa <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * absa)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                phase = apq / absa
                phc = phase.conjugate()

                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * phc * rowp - s * rowq
                a[q, :] = s * phc * rowp + c * rowq
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * phase * colp - s * colq
                a[:, q] = s * phase * colp + c * colq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * phase * vp - s * vq
                v[:, q] = s * phase * vp + c * vq

        off2 = float(np.sum(np.abs(a[off_mask]) ** 2))
        if np.sqrt(off2) <= thresh:
            return np.diag(a).real.copy(), v, sweep, True

    return np.diag(a).real.copy(), v, max_sweeps, False
