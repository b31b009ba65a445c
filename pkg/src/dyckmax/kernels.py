"""Kernel selection: compiled extension when available, pure Python otherwise.

Set DYCKMAX_PURE=1 in the environment to force the fallback (used by the
benchmark and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

from . import _band_py

try:
    from . import _band as _band_ext
except ImportError:
    _band_ext = None

if _band_ext is not None and not os.environ.get("DYCKMAX_PURE"):
    _active = _band_ext
else:
    _active = _band_py

band_dyck_count = _active.band_dyck_count


def active_kernel() -> str:
    """Name of the kernel picked at import time: 'cython' or 'python'."""
    return _active.IMPL


def get_kernel(name: str):
    """Fetch a specific kernel module by name (for benchmarks and tests)."""
    if name == "python":
        return _band_py
    if name == "cython":
        if _band_ext is None:
            raise RuntimeError("compiled kernel is not available")
        return _band_ext
    raise ValueError(f"unknown kernel {name!r}")


def available_kernels() -> list[str]:
    names = ["python"]
    if _band_ext is not None:
        names.append("cython")
    return names
