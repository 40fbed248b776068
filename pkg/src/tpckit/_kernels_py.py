"""Pure-Python implementations of the hot kernels.

These are the reference versions: exact over Python integers, so they never
overflow.  ``_kernels.pyx`` mirrors the same signatures in C-level integers.
"""
from __future__ import annotations

from math import gcd

import numpy as np

from .errors import NoConvergence


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref_int(indptr, indices, data, ncols: int) -> tuple[list[int], list[list[int]]]:
    """Integer reduced row echelon form of a sparse (CSR) integer matrix.

    Rows are added one at a time to an echelon basis kept fully reduced:
    every basis row is primitive, has a positive pivot, and is zero in every
    other pivot column.  Returns ``(pivots, rows)`` ordered by pivot column.
    """
    pivots: list[int] = []
    basis: list[list[int]] = []
    nrows = len(indptr) - 1
    for r in range(nrows):
        v = [0] * ncols
        for k in range(indptr[r], indptr[r + 1]):
            v[indices[k]] += int(data[k])
        for p, b in zip(pivots, basis):
            c = v[p]
            if c:
                a = b[p]
                v = [a * x - c * y for x, y in zip(v, b)]
        q = next((j for j, x in enumerate(v) if x), None)
        if q is None:
            continue
        if v[q] < 0:
            v = [-x for x in v]
        v = _primitive(v)
        a = v[q]
        for i, b in enumerate(basis):
            c = b[q]
            if c:
                basis[i] = _primitive([a * x - c * y for x, y in zip(b, v)])
        pivots.append(q)
        basis.append(v)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [pivots[i] for i in order], [basis[i] for i in order]


def power_iterate(indptr, indices, weights, n: int, tol: float, max_iter: int):
    """Dominant eigenpair of a symmetric nonnegative matrix given in CSR form.

    Iterates on ``A + I`` so that bipartite spectra (``±delta``) do not
    oscillate.  Returns ``(delta, vector, iterations)`` with ``max(vector) == 1``.
    """
    rows = np.repeat(np.arange(n), np.diff(np.asarray(indptr)))
    a = np.zeros((n, n))
    np.add.at(a, (rows, np.asarray(indices, dtype=np.intp)), np.asarray(weights, dtype=float))
    a[np.diag_indices(n)] += 1.0
    x = np.ones(n)
    lam_prev = np.inf
    for it in range(1, max_iter + 1):
        y = a @ x
        lam = float(y.max())
        resid = float(np.abs(y - lam * x).max())
        x = y / lam
        if abs(lam - lam_prev) < tol and resid < tol:
            return lam - 1.0, x, it
        lam_prev = lam
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps")
