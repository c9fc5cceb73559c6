"""Select the compiled kernels when available, else the pure-Python ones.

Set ``HAUSDORFF_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels as python_backend

compiled_backend = None
if not os.environ.get("HAUSDORFF_PURE_PYTHON"):
    try:
        from . import _speedups as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND: str = _active.BACKEND
cover_dp = _active.cover_dp
clique_masks = _active.clique_masks

__all__ = ["BACKEND", "cover_dp", "clique_masks", "python_backend", "compiled_backend"]
