# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled histogram kernel. Semantics match _kernel_py exactly; the Python
module is the fallback and the reference for what each routine does."""

import numpy as np

cimport numpy as cnp
from libc.math cimport asin, atan2, floor, sqrt, M_PI

cnp.import_array()

cdef double RAD2DEG = 180.0 / M_PI

BACKEND = "cython"


def histogram_fill(cnp.float64_t[::1] out,
                   cnp.float64_t[::1] obs_x, cnp.float64_t[::1] obs_y,
                   cnp.float64_t[::1] r_tot,
                   double tx, double ty, double bdx, double bdy,
                   double window, double alpha, double cell,
                   double a, double b, double half_cells):
    cdef Py_ssize_t n = out.shape[0]
    cdef Py_ssize_t m = obs_x.shape[0]
    cdef Py_ssize_t i, k
    cdef long k_lo, k_hi
    cdef double dx, dy, d, d_cells, ratio, gamma, beta, lo, hi, mag
    cdef bint coincident = False

    with nogil:
        for i in range(m):
            dx = obs_x[i] - tx
            dy = obs_y[i] - ty
            d = sqrt(dx * dx + dy * dy)
            if d == 0.0:
                coincident = True
                break
            d_cells = d / cell
            if d_cells > half_cells:
                continue
            ratio = r_tot[i] / d
            if ratio >= 1.0:
                gamma = 90.0
            else:
                gamma = RAD2DEG * asin(ratio)
            beta = RAD2DEG * atan2(bdy * dx - bdx * dy, bdx * dx + bdy * dy)
            lo = beta - gamma
            hi = beta + gamma
            k_lo = <long>floor((lo + window) / alpha - 0.5) + 1
            k_hi = <long>floor((hi + window) / alpha + 0.5)
            if k_lo < 0:
                k_lo = 0
            if k_hi > n - 1:
                k_hi = n - 1
            if k_lo > k_hi:
                continue
            mag = a - b * (d_cells * d_cells)
            for k in range(k_lo, k_hi + 1):
                out[k] += mag
    if coincident:
        raise ValueError(
            "obstacle center coincides with the acting target center")


def bearings_and_distances(cnp.float64_t[::1] obs_x, cnp.float64_t[::1] obs_y,
                           double tx, double ty, double bdx, double bdy):
    cdef Py_ssize_t m = obs_x.shape[0]
    beta_arr = np.empty(m, dtype=np.float64)
    dist_arr = np.empty(m, dtype=np.float64)
    cdef cnp.float64_t[::1] beta = beta_arr
    cdef cnp.float64_t[::1] dist = dist_arr
    cdef Py_ssize_t i
    cdef double dx, dy, d
    cdef bint coincident = False
    with nogil:
        for i in range(m):
            dx = obs_x[i] - tx
            dy = obs_y[i] - ty
            d = sqrt(dx * dx + dy * dy)
            if d == 0.0:
                coincident = True
                break
            beta[i] = RAD2DEG * atan2(bdy * dx - bdx * dy, bdx * dx + bdy * dy)
            dist[i] = d
    if coincident:
        raise ValueError(
            "obstacle center coincides with the acting target center")
    return beta_arr, dist_arr
