"""Kernel backend selection.

The compiled extension is preferred when present; set I3_PURE_PYTHON to any
non-empty value to force the pure-Python kernels (useful for debugging and
for the backend-equivalence tests).
"""
from __future__ import annotations

import os

if os.environ.get("I3_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND
