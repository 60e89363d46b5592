# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled profile kernels; same contract as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport INFINITY, fabs, isfinite

cnp.import_array()


cdef inline double _value(const double[::1] a, const double[::1] b, double lam) noexcept nogil:
    cdef Py_ssize_t k
    cdef double v, m = 0.0
    for k in range(a.shape[0]):
        v = fabs(a[k] + lam * b[k])
        if v > m:
            m = v
    return m


def profile_value(a, b, double lam):
    cdef const double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    return _value(av, bv, lam)


def profile_min(a, b, double tol):
    cdef const double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t i, j, c = 0
    cdef double den, lam, v, best, pick
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lams = np.empty(1 + n * n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] vals
    cdef double[::1] L = lams

    with nogil:
        L[0] = 0.0
        c = 1
        for i in range(n):
            for j in range(i, n):
                if i != j:
                    den = bv[i] - bv[j]
                    if den != 0.0:
                        lam = (av[j] - av[i]) / den
                        if isfinite(lam):
                            L[c] = lam
                            c += 1
                den = bv[i] + bv[j]
                if den != 0.0:
                    lam = -(av[i] + av[j]) / den
                    if isfinite(lam):
                        L[c] = lam
                        c += 1

    vals = np.empty(c, dtype=np.float64)
    cdef double[::1] W = vals
    with nogil:
        best = _value(av, bv, L[0])
        W[0] = best
        for i in range(1, c):
            v = _value(av, bv, L[i])
            W[i] = v
            if v < best:
                best = v
        pick = INFINITY
        for i in range(c):
            if W[i] <= best + tol and L[i] < pick:
                pick = L[i]
    return pick, best
