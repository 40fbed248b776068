"""Exact rational linear algebra used by the weight solver.

Rows are sparse integer vectors (``{column: coefficient}``).  Elimination is
fraction-free and runs in :mod:`tpckit.kernels`; everything here is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

from . import kernels


def _csr(rows: Sequence[Mapping[int, int]]):
    indptr, indices, data = [0], [], []
    for row in rows:
        for col, val in sorted(row.items()):
            if val:
                indices.append(col)
                data.append(val)
        indptr.append(len(indices))
    return indptr, indices, data


def rref(rows: Sequence[Mapping[int, int]], ncols: int) -> tuple[list[int], list[list[int]]]:
    """Integer reduced row echelon form (pivots, rows); see ``kernels.rref_int``."""
    if ncols == 0:
        return [], []
    return kernels.rref_int(*_csr(rows), ncols)


def canonical(vec: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Scale to a primitive integer vector whose first nonzero entry is positive."""
    den = 1
    for x in vec:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def nullspace(rows: Sequence[Mapping[int, int]], ncols: int) -> list[tuple[int, ...]]:
    """Canonical integer basis of the rational kernel, sorted lexicographically."""
    pivots, red = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p, row in zip(pivots, red):
            if row[f]:
                vec[p] = Fraction(-row[f], row[p])
        basis.append(canonical(vec))
    return sorted(basis)


def rank(rows: Sequence[Mapping[int, int]], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One exact solution of ``matrix @ x = rhs`` (free variables zero), or None.

    Small dense Gauss-Jordan over ``Fraction``; used only for extension
    problems whose size is the weight-space dimension.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(aug[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x
