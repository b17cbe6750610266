"""Kernel backend selection.

The compiled extension is used when it imports cleanly; otherwise the pure
Python twin takes over.  Set ``MLSEMIGROUP_PURE_PYTHON=1`` to force the
fallback (useful for benchmarking and twin-equality testing).
"""

import os

from mlsemigroup import _ddcore as _python_kernel

if os.environ.get("MLSEMIGROUP_PURE_PYTHON", "").strip() not in ("", "0"):
    kernel = _python_kernel
else:
    try:
        from mlsemigroup import _ddcore_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _python_kernel

ml_series = kernel.ml_series
gamma_stirling = kernel.gamma_stirling


def backend_name() -> str:
    """Name of the active kernel backend: 'cython' or 'python'."""
    return kernel.BACKEND
