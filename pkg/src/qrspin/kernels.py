"""Kernel selection: compiled ``_kernels`` when importable, else pure Python.

Set ``QRSPIN_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if not os.environ.get("QRSPIN_PURE_PYTHON"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        _impl = _kernels_py

positions = _impl.positions
move = _impl.move
band_moves = _impl.band_moves
diagonal_support = _impl.diagonal_support
fn_eigen_scaled = _impl.fn_eigen_scaled
hook_position = _impl.hook_position

__all__ = ["BACKEND", "positions", "move", "band_moves", "diagonal_support",
           "fn_eigen_scaled", "hook_position"]
