"""Kernel dispatch: compiled core when importable, pure Python otherwise.

Set ``GRSEQUIV_PURE=1`` to force the fallback.  Fields with
``q > TABLE_MAX_Q`` always use the fallback because the compiled kernels work
on flat q*q tables.
"""

from __future__ import annotations

import os

from . import _pykernels
from .field import TABLE_MAX_Q, FieldSpec

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

NATIVE_AVAILABLE = _ckernels is not None
BACKEND = "cython" if NATIVE_AVAILABLE and os.environ.get("GRSEQUIV_PURE", "0") in ("", "0") else "python"


def _native(F: FieldSpec, backend: str | None) -> bool:
    backend = backend or BACKEND
    if backend == "cython":
        if not NATIVE_AVAILABLE:
            raise RuntimeError("compiled kernels are not available")
        return F.q <= TABLE_MAX_Q
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return False


def rref(F: FieldSpec, rows, ncols: int, backend: str | None = None) -> list[list[int]]:
    if _native(F, backend):
        return _ckernels.rref(F.tables(), rows, ncols)
    return _pykernels.rref(F, rows, ncols)


def span(F: FieldSpec, rows, ncols: int, backend: str | None = None) -> set[tuple[int, ...]]:
    if _native(F, backend):
        return _ckernels.span(F.tables(), rows, ncols)
    return _pykernels.span(F, rows, ncols)


def min_weight(F: FieldSpec, rows, ncols: int, backend: str | None = None) -> tuple[int, int]:
    if _native(F, backend):
        return _ckernels.min_weight(F.tables(), rows, ncols)
    return _pykernels.min_weight(F, rows, ncols)
