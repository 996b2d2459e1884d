# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled eigensolver kernel.

Mirrors ``pykernels.jacobi_eigh`` step for step: same sweep order, same
rotation expressions, same convergence accounting. Compiled with
fp-contraction disabled so the arithmetic matches the numpy fallback
bit for bit.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport copysign, fabs, sqrt

cnp.import_array()


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef double v
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if j != i:
                v = a[i, j]
                acc += v * v
    return sqrt(acc)


cdef double _frobenius_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef double v
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            v = a[i, j]
            acc += v * v
    return sqrt(acc)


def jacobi_eigh(a_in, double tol=1e-12, int max_sweeps=100):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns ``(w, v, sweeps)``; see the python twin for the full contract.
    """
    a_arr = np.array(a_in, dtype=np.float64, order="C")
    if a_arr.ndim != 2 or a_arr.shape[0] != a_arr.shape[1]:
        raise ValueError("expected a square matrix")
    cdef Py_ssize_t n = a_arr.shape[0]
    v_arr = np.eye(n)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] v = v_arr
    if n < 2:
        return np.diag(a_arr).copy(), v_arr, 0

    cdef double threshold, skip, apq, theta, t, c, s, rp, rq
    cdef Py_ssize_t p, q, j, i
    cdef int sweeps = 0

    with nogil:
        threshold = tol * _frobenius_norm(a, n)
        skip = threshold / (10.0 * n)

        while sweeps < max_sweeps:
            if _offdiag_norm(a, n) <= threshold:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) <= skip:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 1.0 / (2.0 * theta)
                    else:
                        t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c

                    for j in range(n):
                        rp = a[p, j]
                        rq = a[q, j]
                        a[p, j] = c * rp - s * rq
                        a[q, j] = s * rp + c * rq

                    for i in range(n):
                        rp = a[i, p]
                        rq = a[i, q]
                        a[i, p] = c * rp - s * rq
                        a[i, q] = s * rp + c * rq

                    a[p, q] = 0.0
                    a[q, p] = 0.0

                    for i in range(n):
                        rp = v[i, p]
                        rq = v[i, q]
                        v[i, p] = c * rp - s * rq
                        v[i, q] = s * rp + c * rq
            sweeps += 1

    return np.diag(a_arr).copy(), v_arr, sweeps
