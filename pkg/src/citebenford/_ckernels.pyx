# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``_pykernels`` exactly."""

import numpy as np

from libc.math cimport floor, isfinite, log, nextafter, pow, fabs
from libc.stdint cimport int64_t, uint64_t

from citebenford._pykernels import exact_float_digit

cdef double GUARD = 1e-9
cdef double INV_2_53 = 1.0 / 9007199254740992.0
cdef uint64_t XORSHIFT_MULT = 0x2545F4914F6CDD1DULL


cdef inline int _int_digit(int64_t n, int64_t base) nogil:
    while n >= base:
        n = n // base
    return <int>n


cdef int _float_digit(double x, int base) except -1:
    cdef double k = floor(log(x) / log(<double>base))
    cdef double y = x * pow(<double>base, -k)
    cdef int d
    cdef double frac
    if y < 1.0:
        y *= base
    elif y >= base:
        y /= base
    if not (1.0 <= y < base):
        return exact_float_digit(x, base)
    d = <int>y
    frac = y - d
    if frac < GUARD * y or (1.0 - frac) < GUARD * y:
        return exact_float_digit(x, base)
    return d


def tally_int64(const int64_t[::1] values, int base):
    counts = np.zeros(base - 1, dtype=np.int64)
    cdef int64_t[::1] c = counts
    cdef Py_ssize_t i
    cdef int64_t v
    for i in range(values.shape[0]):
        v = values[i]
        if v <= 0:
            return counts, i
        c[_int_digit(v, base) - 1] += 1
    return counts, -1


def tally_float64(const double[::1] values, int base):
    counts = np.zeros(base - 1, dtype=np.int64)
    cdef int64_t[::1] c = counts
    cdef Py_ssize_t i
    cdef double x
    cdef int d
    for i in range(values.shape[0]):
        x = values[i]
        if not (x > 0.0) or not isfinite(x):
            return counts, i
        if x == floor(x) and x < 9.0e18:
            d = _int_digit(<int64_t>x, base)
        else:
            d = _float_digit(x, base)
        c[d - 1] += 1
    return counts, -1


cdef inline uint64_t _step(uint64_t* state) nogil:
    cdef uint64_t x = state[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    state[0] = x
    return x * XORSHIFT_MULT


cdef inline double _uniform(uint64_t* state) nogil:
    return <double>(_step(state) >> 11) * INV_2_53


def sample(int law, Py_ssize_t n, int base, int span, double beta, state):
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef uint64_t s = <uint64_t>state
    cdef Py_ssize_t i
    cdef double u, v, w, m, t, top
    cdef double fbase = <double>base
    cdef int d, j
    with nogil:
        for i in range(n):
            u = _uniform(&s)
            if law == 0:
                v = _uniform(&s)
                j = <int>(v * span)
                if j > span - 1:
                    j = span - 1
                o[i] = pow(fbase, u) * pow(fbase, <double>j)
            elif law == 1:
                v = _uniform(&s)
                w = _uniform(&s)
                d = <int>(u * (base - 1))
                if d > base - 2:
                    d = base - 2
                d = d + 1
                j = <int>(w * span)
                if j > span - 1:
                    j = span - 1
                m = d + v
                if m >= d + 1:
                    m = nextafter(<double>(d + 1), 0.0)
                o[i] = m * pow(fbase, <double>j)
            else:
                if fabs(beta - 1.0) < GUARD:
                    o[i] = pow(fbase, span * u)
                else:
                    t = 1.0 - beta
                    top = pow(fbase, span * t)
                    o[i] = pow(1.0 + u * (top - 1.0), 1.0 / t)
    return out, s
