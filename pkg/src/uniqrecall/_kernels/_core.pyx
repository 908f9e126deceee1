# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Mirrors ``_pure.py`` operation for operation."""

import numpy as np

from libc.math cimport exp, lgamma, log, log1p

cdef long long LOG_SWITCH = 1000


def binomial_mixture(const long long[:] ks, const double[:] weights, Py_ssize_t k_max,
                     double r, double tol):
    cdef Py_ssize_t n = ks.shape[0]
    delta_arr = np.zeros(k_max + 1, dtype=np.float64)
    comp_arr = np.zeros(k_max + 1, dtype=np.float64)
    row_arr = np.zeros(k_max + 1, dtype=np.float64)
    cdef double[:] delta = delta_arr
    cdef double[:] comp = comp_arr
    cdef double[:] row = row_arr
    cdef double lr = log(r)
    cdef double lq = log1p(-r)
    cdef double up = r / (1.0 - r)
    cdef double down = (1.0 - r) / r
    cdef Py_ssize_t j
    cdef long long x, m, k, lo, hi
    cdef double w, pm, p, q, v, t, total, scale
    for j in range(n):
        x = ks[j]
        w = weights[j]
        m = <long long>((x + 1) * r)
        if m > x:
            m = x
        pm = exp(lgamma(x + 1) - lgamma(m + 1) - lgamma(x - m + 1) + m * lr + (x - m) * lq)
        row[m] = 1.0
        p = 1.0
        hi = m
        while hi < x:
            q = (x - hi) / (hi + 1.0) * up
            p = p * q
            hi += 1
            row[hi] = p
            if q < 1.0 and p * pm <= tol * (1.0 - q):
                break
        p = 1.0
        lo = m
        while lo > 0:
            q = lo / (x - lo + 1.0) * down
            p = p * q
            lo -= 1
            row[lo] = p
            if q < 1.0 and p * pm <= tol * (1.0 - q):
                break
        total = 0.0
        for k in range(lo, hi + 1):
            total += row[k]
        scale = w / total
        for k in range(lo, hi + 1):
            v = scale * row[k] - comp[k]
            t = delta[k] + v
            comp[k] = (t - delta[k]) - v
            delta[k] = t
    return delta_arr


def miss_ratios(const long long[:] rhos, long long a, long long b):
    cdef Py_ssize_t n = rhos.shape[0]
    out_arr = np.zeros(n, dtype=np.float64)
    cdef double[:] out = out_arr
    cdef double prod = 1.0
    cdef double logsum = 0.0
    cdef bint in_log = False
    cdef long long j = 0
    cdef long long rho, num
    cdef Py_ssize_t i, z
    for i in range(n):
        rho = rhos[i]
        while j < rho:
            num = a - b - j
            if num <= 0:
                prod = 0.0
                in_log = False
                j = rho
                break
            if in_log:
                logsum += log1p(-(<double>b) / (a - j))
            else:
                prod *= (<double>num) / (a - j)
                if j + 1 == LOG_SWITCH:
                    if prod > 0.0:
                        logsum = log(prod)
                        in_log = True
            j += 1
        if prod == 0.0:
            for z in range(i, n):
                out[z] = 0.0
            break
        out[i] = exp(logsum) if in_log else prod
    return out_arr
