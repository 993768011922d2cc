"""Kernel selection: compiled Jacobi extension with a numpy fallback.

The compiled module is preferred when importable; set the environment
variable ``ENTROFLOW_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by tests that compare the two).
"""

import os

if os.environ.get("ENTROFLOW_PURE_PYTHON"):
    from ._jacobi_py import jacobi_eigh

    BACKEND = "python"
else:
    try:
        from ._jacobi_cy import jacobi_eigh  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from ._jacobi_py import jacobi_eigh  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["jacobi_eigh", "BACKEND"]
