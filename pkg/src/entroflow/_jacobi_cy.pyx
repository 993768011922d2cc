"""Compiled cyclic complex Jacobi kernel.

Same rotation sequence as the numpy reference in ``_jacobi_py``; see that
module for the derivation. Kept free of the numpy C API on purpose: typed
memoryviews are all the speed this needs at dim <= 64.
"""

import numpy as np

from libc.math cimport sqrt


cdef inline double _abs2(double complex z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


def jacobi_eigh(matrix, double tol, int max_sweeps):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors, sweeps, converged)`` with the
    eigenvalues in diagonal (unsorted) order and the eigenvectors as columns.
    Convergence: off-diagonal Frobenius norm <= tol * ||matrix||_F.
    """
    a_arr = np.array(matrix, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a_arr.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)

    cdef double complex[:, ::1] a = a_arr
    cdef double complex[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double absa, app, aqq, tau, t, c, s, norm2, off2, thresh, skip
    cdef double complex apq, phase, phc, xp, xq

    norm2 = 0.0
    for p in range(n):
        for q in range(n):
            norm2 += _abs2(a[p, q])
    if n == 1 or norm2 == 0.0:
        return np.diag(a_arr).real.copy(), v_arr, 0, True

    thresh = tol * sqrt(norm2)
    skip = thresh / n

    for sweep in range(1, max_sweeps + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                absa = sqrt(_abs2(apq))
                if absa <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * absa)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                phase = apq / absa
                phc = phase.conjugate()

                for i in range(n):
                    xp = a[p, i]
                    xq = a[q, i]
                    a[p, i] = c * phc * xp - s * xq
                    a[q, i] = s * phc * xp + c * xq
                for i in range(n):
                    xp = a[i, p]
                    xq = a[i, q]
                    a[i, p] = c * phase * xp - s * xq
                    a[i, q] = s * phase * xp + c * xq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                for i in range(n):
                    xp = v[i, p]
                    xq = v[i, q]
                    v[i, p] = c * phase * xp - s * xq
                    v[i, q] = s * phase * xp + c * xq

        off2 = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off2 += _abs2(a[p, q])
        if sqrt(off2) <= thresh:
            return np.diag(a_arr).real.copy(), v_arr, sweep, True

    return np.diag(a_arr).real.copy(), v_arr, max_sweeps, False
