# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: CSR diffusion step fused with the per-tick saturation check."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "c"

ctypedef cnp.int64_t i64
ctypedef cnp.float64_t f64


cdef void _step(Py_ssize_t n, const i64[::1] indptr, const i64[::1] indices,
                const f64[::1] inv_deg, const f64[::1] m, double p,
                f64[::1] out, f64[::1] share) noexcept nogil:
    cdef Py_ssize_t i, e
    cdef double acc
    cdef double keep = 1.0 - p
    for i in range(n):
        share[i] = p * m[i] * inv_deg[i]
    for i in range(n):
        acc = 0.0
        for e in range(indptr[i], indptr[i + 1]):
            acc += share[indices[e]]
        out[i] = keep * m[i] + acc


cdef double _regression_r2(Py_ssize_t n, const f64[::1] dx, double sxx,
                           const f64[::1] m) noexcept nogil:
    cdef Py_ssize_t i
    cdef double total = 0.0
    cdef double ybar, dy, sxy = 0.0, syy = 0.0, r2
    for i in range(n):
        total += m[i]
    ybar = total / n
    for i in range(n):
        dy = m[i] - ybar
        sxy += dx[i] * dy
        syy += dy * dy
    if syy <= 0.0:
        return 0.0
    r2 = (sxy * sxy) / (sxx * syy)
    if r2 > 1.0:
        r2 = 1.0
    elif r2 < 0.0:
        r2 = 0.0
    return r2


cdef double _uniformity(Py_ssize_t n, const f64[::1] m) noexcept nogil:
    cdef Py_ssize_t i
    cdef double total = 0.0
    cdef double mean, dev, worst = 0.0, value
    for i in range(n):
        total += m[i]
    mean = total / n
    for i in range(n):
        dev = m[i] - mean
        if dev < 0.0:
            dev = -dev
        if dev > worst:
            worst = dev
    value = 1.0 - worst / mean
    if value < 0.0:
        value = 0.0
    return value


def diffusion_step(const i64[::1] indptr, const i64[::1] indices,
                   const f64[::1] inv_deg, const f64[::1] masses, double p,
                   f64[::1] out):
    cdef Py_ssize_t n = masses.shape[0]
    share_arr = np.empty(n, dtype=np.float64)
    cdef f64[::1] share = share_arr
    _step(n, indptr, indices, inv_deg, masses, p, out, share)


def regression_r2(const f64[::1] dx, double sxx, const f64[::1] masses):
    return _regression_r2(masses.shape[0], dx, sxx, masses)


def uniformity(const f64[::1] masses):
    return _uniformity(masses.shape[0], masses)


def run_saturation(const i64[::1] indptr, const i64[::1] indices,
                   const f64[::1] inv_deg, const f64[::1] dx, double sxx,
                   const f64[::1] masses0, double p, double threshold,
                   long max_steps):
    cdef Py_ssize_t n = masses0.shape[0]
    cdef bint regular = sxx <= 0.0
    cdef long t
    cdef double r2
    cdef bint converged = 0
    cdef long steps = max_steps

    buf_a = np.array(masses0, dtype=np.float64, copy=True)
    buf_b = np.empty(n, dtype=np.float64)
    share_arr = np.empty(n, dtype=np.float64)
    traj_arr = np.empty(max_steps, dtype=np.float64)

    cdef f64[::1] cur = buf_a
    cdef f64[::1] nxt = buf_b
    cdef f64[::1] share = share_arr
    cdef f64[::1] traj = traj_arr
    cdef f64[::1] tmp

    with nogil:
        for t in range(max_steps):
            _step(n, indptr, indices, inv_deg, cur, p, nxt, share)
            tmp = cur
            cur = nxt
            nxt = tmp
            if regular:
                r2 = _uniformity(n, cur)
            else:
                r2 = _regression_r2(n, dx, sxx, cur)
            traj[t] = r2
            if r2 >= threshold:
                converged = 1
                steps = t + 1
                break

    final = np.array(cur, dtype=np.float64, copy=True)
    return bool(converged), traj_arr[:steps].copy(), final
