# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled HJI sweep kernel; mirrors numpy_backend.sweep_rhs exactly."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef double WENO_EPS = 1e-6


cdef inline double _weno5(double v1, double v2, double v3,
                          double v4, double v5) noexcept nogil:
    cdef double s1, s2, s3, a1, a2, a3, q1, q2, q3
    s1 = (13.0 / 12.0) * (v1 - 2 * v2 + v3) ** 2 + 0.25 * (v1 - 4 * v2 + 3 * v3) ** 2
    s2 = (13.0 / 12.0) * (v2 - 2 * v3 + v4) ** 2 + 0.25 * (v2 - v4) ** 2
    s3 = (13.0 / 12.0) * (v3 - 2 * v4 + v5) ** 2 + 0.25 * (3 * v3 - 4 * v4 + v5) ** 2
    a1 = 0.1 / ((s1 + WENO_EPS) * (s1 + WENO_EPS))
    a2 = 0.6 / ((s2 + WENO_EPS) * (s2 + WENO_EPS))
    a3 = 0.3 / ((s3 + WENO_EPS) * (s3 + WENO_EPS))
    q1 = v1 / 3.0 - 7.0 * v2 / 6.0 + 11.0 * v3 / 6.0
    q2 = -v2 / 6.0 + 5.0 * v3 / 6.0 + v4 / 3.0
    q3 = v3 / 3.0 + 5.0 * v4 / 6.0 - v5 / 6.0
    return (a1 * q1 + a2 * q2 + a3 * q3) / (a1 + a2 + a3)


def sweep_rhs(double[:, ::1] wpad, double[::1] x2row,
              double[:, ::1] lo, double[:, ::1] hi,
              double accel_up, double accel_dn,
              double dx1, double dx2,
              double alpha1, double alpha2, int order):
    cdef Py_ssize_t n1 = wpad.shape[0] - 6
    cdef Py_ssize_t n2 = wpad.shape[1] - 6
    cdef Py_ssize_t i, j, k
    cdef double p1m, p1p, p2m, p2p, p1c, p2c, accel

    dm0_arr = np.empty((n1 + 5, n2), dtype=np.float64)
    dm1_arr = np.empty((n1, n2 + 5), dtype=np.float64)
    out_arr = np.empty((n1, n2), dtype=np.float64)
    cdef double[:, ::1] dm0 = dm0_arr
    cdef double[:, ::1] dm1 = dm1_arr
    cdef double[:, ::1] out = out_arr

    with nogil:
        for k in range(n1 + 5):
            for j in range(n2):
                dm0[k, j] = (wpad[k + 1, j + 3] - wpad[k, j + 3]) / dx1
        for i in range(n1):
            for k in range(n2 + 5):
                dm1[i, k] = (wpad[i + 3, k + 1] - wpad[i + 3, k]) / dx2

        for i in range(n1):
            for j in range(n2):
                if order == 1:
                    p1m = dm0[i + 2, j]
                    p1p = dm0[i + 3, j]
                    p2m = dm1[i, j + 2]
                    p2p = dm1[i, j + 3]
                else:
                    p1m = _weno5(dm0[i, j], dm0[i + 1, j], dm0[i + 2, j],
                                 dm0[i + 3, j], dm0[i + 4, j])
                    p1p = _weno5(dm0[i + 5, j], dm0[i + 4, j], dm0[i + 3, j],
                                 dm0[i + 2, j], dm0[i + 1, j])
                    p2m = _weno5(dm1[i, j], dm1[i, j + 1], dm1[i, j + 2],
                                 dm1[i, j + 3], dm1[i, j + 4])
                    p2p = _weno5(dm1[i, j + 5], dm1[i, j + 4], dm1[i, j + 3],
                                 dm1[i, j + 2], dm1[i, j + 1])
                p1c = 0.5 * (p1m + p1p)
                p2c = 0.5 * (p2m + p2p)
                if p2c > 0.0:
                    accel = accel_up + lo[i, j]
                else:
                    accel = accel_dn + hi[i, j]
                out[i, j] = (p1c * x2row[j] + p2c * accel
                             + 0.5 * alpha1 * (p1p - p1m)
                             + 0.5 * alpha2 * (p2p - p2m))
    return out_arr
