"""Backend selection for the numeric kernels.

Kernels are written in the subset of Python/numpy that numba can compile.
When numba is importable and ``RLZI_DISABLE_NUMBA`` is unset (or "0"), they
are compiled with ``numba.njit``; otherwise the same functions run as plain
numpy code.  Either way the uncompiled function is reachable as ``.py_func``.
"""
from __future__ import annotations

import os

_flag = os.environ.get("RLZI_DISABLE_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_ENABLED = numba is not None and _flag in ("", "0", "false", "no")


def kernel(fn):
    if NUMBA_ENABLED:
        return numba.njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"
