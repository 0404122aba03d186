# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batched evaluation of polynomials in z1, z2, conj(z1), conj(z2)."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def poly_eval_batch(exps, coeffs, z1, z2):
    cdef const cnp.int64_t[:, ::1] E = np.ascontiguousarray(exps, dtype=np.int64).reshape(-1, 4)
    cdef const double complex[::1] C = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double complex[::1] A = np.ascontiguousarray(z1, dtype=np.complex128)
    cdef const double complex[::1] B = np.ascontiguousarray(z2, dtype=np.complex128)
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t nt = E.shape[0]
    out_arr = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    if nt == 0 or n == 0:
        return out_arr

    cdef Py_ssize_t k, t, e, i
    cdef Py_ssize_t top[4]
    for k in range(4):
        top[k] = 0
    for t in range(nt):
        for k in range(4):
            if E[t, k] > top[k]:
                top[k] = E[t, k]
    cdef Py_ssize_t width = top[0] + top[1] + top[2] + top[3] + 4
    cdef Py_ssize_t off[4]
    off[0] = 0
    off[1] = top[0] + 1
    off[2] = off[1] + top[1] + 1
    off[3] = off[2] + top[2] + 1
    pw_arr = np.empty(width, dtype=np.complex128)
    cdef double complex[::1] pw = pw_arr
    cdef double complex base[4]
    cdef double complex acc

    for i in range(n):
        base[0] = A[i]
        base[1] = B[i]
        base[2] = A[i].conjugate()
        base[3] = B[i].conjugate()
        for k in range(4):
            pw[off[k]] = 1.0
            for e in range(1, top[k] + 1):
                pw[off[k] + e] = pw[off[k] + e - 1] * base[k]
        acc = 0
        for t in range(nt):
            acc = acc + C[t] * pw[off[0] + E[t, 0]] * pw[off[1] + E[t, 1]] \
                * pw[off[2] + E[t, 2]] * pw[off[3] + E[t, 3]]
        out[i] = acc
    return out_arr
