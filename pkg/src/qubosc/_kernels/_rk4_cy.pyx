# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled RK4 propagation kernel; drop-in for _rk4_py.rk4_history."""

import numpy as np

from libc.math cimport cos

ctypedef double complex cplx

cdef double complex NEG_I = -1j


cdef void _rhs(double ts, double g0, double[::1] w, double[::1] E,
               cplx[:, ::1] X, cplx[:, ::1] y, cplx[:, ::1] out) noexcept nogil:
    cdef Py_ssize_t dim = y.shape[0]
    cdef Py_ssize_t nc = y.shape[1]
    cdef Py_ssize_t i, j, c
    cdef double g
    cdef cplx acc
    for c in range(nc):
        g = g0 * cos(w[c] * ts)
        for i in range(dim):
            acc = E[i] * y[i, c]
            for j in range(dim):
                acc = acc + g * X[i, j] * y[j, c]
            out[i, c] = NEG_I * acc


cdef void _axpy(cplx[:, ::1] y, double a, cplx[:, ::1] k, cplx[:, ::1] out) noexcept nogil:
    cdef Py_ssize_t i, c
    for i in range(y.shape[0]):
        for c in range(y.shape[1]):
            out[i, c] = y[i, c] + a * k[i, c]


def rk4_history(energies, coupling_op, double g0, varpi, y0, double t0,
                double dt, Py_ssize_t n_samples, Py_ssize_t substeps=1):
    """See _rk4_py.rk4_history; identical contract and stage arithmetic."""
    E_arr = np.ascontiguousarray(energies, dtype=np.float64)
    X_arr = np.ascontiguousarray(coupling_op, dtype=np.complex128)
    w_arr = np.ascontiguousarray(varpi, dtype=np.float64)
    y_arr = np.array(y0, dtype=np.complex128, order="C")
    if y_arr.ndim != 2 or y_arr.shape[0] != E_arr.shape[0] or w_arr.shape[0] != y_arr.shape[1]:
        raise ValueError("inconsistent kernel argument shapes")

    cdef Py_ssize_t dim = y_arr.shape[0]
    cdef Py_ssize_t nc = y_arr.shape[1]
    out_arr = np.empty((n_samples + 1, dim, nc), dtype=np.complex128)
    out_arr[0] = y_arr

    cdef double[::1] E = E_arr
    cdef cplx[:, ::1] X = X_arr
    cdef double[::1] w = w_arr
    cdef cplx[:, ::1] y = y_arr
    cdef cplx[:, :, ::1] out = out_arr

    scratch = [np.empty((dim, nc), dtype=np.complex128) for _ in range(5)]
    cdef cplx[:, ::1] k1 = scratch[0]
    cdef cplx[:, ::1] k2 = scratch[1]
    cdef cplx[:, ::1] k3 = scratch[2]
    cdef cplx[:, ::1] k4 = scratch[3]
    cdef cplx[:, ::1] yt = scratch[4]

    cdef double h = dt / substeps
    cdef double ts
    cdef Py_ssize_t k, j, i, c, base

    with nogil:
        for k in range(n_samples):
            base = k * substeps
            for j in range(substeps):
                ts = t0 + (base + j) * h
                _rhs(ts, g0, w, E, X, y, k1)
                _axpy(y, 0.5 * h, k1, yt)
                _rhs(ts + 0.5 * h, g0, w, E, X, yt, k2)
                _axpy(y, 0.5 * h, k2, yt)
                _rhs(ts + 0.5 * h, g0, w, E, X, yt, k3)
                _axpy(y, h, k3, yt)
                _rhs(ts + h, g0, w, E, X, yt, k4)
                for i in range(dim):
                    for c in range(nc):
                        y[i, c] = y[i, c] + (h / 6.0) * (
                            k1[i, c] + 2.0 * k2[i, c] + 2.0 * k3[i, c] + k4[i, c])
            for i in range(dim):
                for c in range(nc):
                    out[k + 1, i, c] = y[i, c]
    return out_arr
