# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled secant-power recurrence.  Same contract as ``_kernels_py``."""

import numpy as np

from libc.math cimport asinh, cos, exp, log, log1p, tan, INFINITY


cdef inline double _log_add(double x, double y) nogil:
    if x < y:
        x, y = y, x
    if y == -INFINITY:
        return x
    return x + log1p(exp(y - x))


def sec_log_table(Py_ssize_t m_max, double phi):
    """ln of int_0^phi sec^m for m = 0 .. m_max, as a float64 array."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    out = np.empty(m_max + 1, dtype=np.float64)
    cdef double[::1] o = out
    cdef double ln_sec = -log(cos(phi))
    cdef double ln_tan = log(tan(phi))
    cdef Py_ssize_t m
    cdef double head, rest
    with nogil:
        o[0] = log(phi)
        if m_max >= 1:
            o[1] = log(asinh(tan(phi)))
        if m_max >= 2:
            o[2] = ln_tan
        for m in range(3, m_max + 1):
            head = (m - 2) * ln_sec + ln_tan - log(<double>(m - 1))
            rest = log1p(-1.0 / (m - 1)) + o[m - 2]
            o[m] = _log_add(head, rest)
    return out
