"""Kernel dispatch: the compiled extension when it was built, else pure Python.

``BACKEND`` names the implementation selected at import time.  Exact
elimination falls back to arbitrary precision on int64 overflow, so the
choice of backend never changes a result.
"""
from __future__ import annotations

import logging

from . import _kernels_py

log = logging.getLogger(__name__)

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def rref_int(indptr, indices, data, ncols):
    if _compiled is not None:
        try:
            return _compiled.rref_int(indptr, indices, data, ncols)
        except OverflowError:
            log.debug("int64 overflow, retrying elimination with Python integers")
    return _kernels_py.rref_int(indptr, indices, data, ncols)


def power_iterate(indptr, indices, weights, n, tol, max_iter):
    impl = _compiled if _compiled is not None else _kernels_py
    return impl.power_iterate(indptr, indices, weights, n, tol, max_iter)
