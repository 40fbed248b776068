# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: 64-bit exact row reduction and CSR power iteration.

Same signatures as ``_kernels_py``.  ``rref_int`` raises ``OverflowError``
when an intermediate leaves the int64 range; the dispatcher then retries
with the arbitrary-precision fallback.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

from .errors import NoConvergence

cnp.import_array()

ctypedef long long i64

cdef extern from *:
    """
    static inline int tk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int tk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int tk_mul_ovf(i64 a, i64 b, i64 *r) nogil
    int tk_sub_ovf(i64 a, i64 b, i64 *r) nogil


cdef inline i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _combine(i64[::1] out, i64 a, i64[::1] x, i64 c, i64[::1] y, Py_ssize_t n) noexcept nogil:
    """out = a*x - c*y, then divided by its content.  Returns 1 on overflow."""
    cdef Py_ssize_t j
    cdef i64 p, q, g = 0
    for j in range(n):
        if tk_mul_ovf(a, x[j], &p) or tk_mul_ovf(c, y[j], &q) or tk_sub_ovf(p, q, &out[j]):
            return 1
        if out[j] != 0 and g != 1:
            g = _gcd(g, out[j])
    if g > 1:
        for j in range(n):
            out[j] = out[j] // g
    return 0


def rref_int(indptr, indices, data, Py_ssize_t ncols):
    cdef cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef cnp.int64_t[::1] dv = np.ascontiguousarray(data, dtype=np.int64)
    cdef Py_ssize_t nrows = ip.shape[0] - 1
    cdef Py_ssize_t n = ncols
    cdef i64[:, ::1] basis = np.zeros((max(n, 1), max(n, 1)), dtype=np.int64)
    cdef i64[::1] piv = np.zeros(max(n, 1), dtype=np.int64)
    cdef i64[::1] v = np.zeros(max(n, 1), dtype=np.int64)
    cdef i64[::1] tmp = np.zeros(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t rank = 0, r, k, i, j, q
    cdef i64 a, c
    cdef int ovf = 0

    with nogil:
        for r in range(nrows):
            for j in range(n):
                v[j] = 0
            for k in range(ip[r], ip[r + 1]):
                v[ix[k]] += dv[k]
            for i in range(rank):
                c = v[piv[i]]
                if c != 0:
                    a = basis[i, piv[i]]
                    if _combine(tmp, a, v, c, basis[i], n):
                        ovf = 1
                        break
                    v[:] = tmp
            if ovf:
                break
            q = -1
            for j in range(n):
                if v[j] != 0:
                    q = j
                    break
            if q < 0:
                continue
            if v[q] < 0:
                for j in range(n):
                    v[j] = -v[j]
            # make primitive
            a = 0
            for j in range(n):
                if v[j] != 0:
                    a = _gcd(a, v[j])
            if a > 1:
                for j in range(n):
                    v[j] = v[j] // a
            a = v[q]
            for i in range(rank):
                c = basis[i, q]
                if c != 0:
                    if _combine(tmp, a, basis[i], c, v, n):
                        ovf = 1
                        break
                    basis[i, :] = tmp
            if ovf:
                break
            basis[rank, :] = v
            piv[rank] = q
            rank += 1

    if ovf:
        raise OverflowError("int64 overflow in exact elimination")
    order = sorted(range(rank), key=lambda t: piv[t])
    arr = np.asarray(basis)
    return [int(piv[t]) for t in order], [[int(x) for x in arr[t, :n]] for t in order]


def power_iterate(indptr, indices, weights, Py_ssize_t n, double tol, long max_iter):
    cdef cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    x_arr = np.ones(n)
    y_arr = np.empty(n)
    cdef double[::1] x = x_arr
    cdef double[::1] y = y_arr
    cdef double lam, lam_prev = float("inf"), resid, s
    cdef Py_ssize_t i, k
    cdef long it
    with nogil:
        for it in range(1, max_iter + 1):
            lam = 0.0
            for i in range(n):
                s = x[i]
                for k in range(ip[i], ip[i + 1]):
                    s += w[k] * x[ix[k]]
                y[i] = s
                if s > lam:
                    lam = s
            resid = 0.0
            for i in range(n):
                s = fabs(y[i] - lam * x[i])
                if s > resid:
                    resid = s
                x[i] = y[i] / lam
            if fabs(lam - lam_prev) < tol and resid < tol:
                with gil:
                    return lam - 1.0, x_arr, it
            lam_prev = lam
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps")
