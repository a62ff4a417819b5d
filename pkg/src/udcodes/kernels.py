"""Kernel dispatch: the compiled extension when it is built, numpy otherwise.

Set ``UDCODES_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("UDCODES_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION
tuple_sum_keys = _impl.tuple_sum_keys
find_collision = _impl.find_collision
min_l1_pairwise = _impl.min_l1_pairwise
