"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` module. Setting ``CDSENUM_PURE_PYTHON=1`` forces
the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("CDSENUM_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

minimal_cds_masks = _impl.minimal_cds_masks
minimal_hitting_masks = _impl.minimal_hitting_masks
branching_number = _impl.branching_number
catalog_max = _impl.catalog_max
grid_min = _impl.grid_min

__all__ = [
    "BACKEND",
    "minimal_cds_masks",
    "minimal_hitting_masks",
    "branching_number",
    "catalog_max",
    "grid_min",
]
