"""Kernel backend selection.

The default is the numba-compiled kernels when numba imports, otherwise the
pure NumPy fallback. Set AGREERANK_BACKEND=numpy (or =numba) to force one.
"""

from __future__ import annotations

import os

ENV_VAR = "AGREERANK_BACKEND"


def get_backend(name: str | None = None):
    """Return the kernel module for `name`, the env var, or auto-detection."""
    choice = (name or os.environ.get(ENV_VAR, "") or "auto").strip().lower()
    if choice == "numpy":
        from . import _kernels_numpy as kernels
    elif choice == "numba":
        from . import _kernels_numba as kernels
    elif choice == "auto":
        try:
            from . import _kernels_numba as kernels
        except ImportError:
            from . import _kernels_numpy as kernels
    else:
        raise ValueError(f"unknown backend {choice!r} (expected 'numba' or 'numpy')")
    return kernels
