# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Birkhoff-sum kernel.

Per fixed point: iterate the integer matrix mod the common denominator and
accumulate the effective roof ``roof * (1 + tau*g)`` evaluated at rational
points.  The loop releases the GIL so the driver can run blocks on threads.
"""

from libc.math cimport cos, sin

cdef double TWO_PI = 6.283185307179586476925286766559


def birkhoff_sums(
    long long[::1] num1,
    long long[::1] num2,
    long long den,
    long long a11,
    long long a12,
    long long a21,
    long long a22,
    int steps,
    double roof_const,
    long long[::1] rk1,
    long long[::1] rk2,
    double[::1] rcos,
    double[::1] rsin,
    double g_const,
    long long[::1] gk1,
    long long[::1] gk2,
    double[::1] gcos,
    double[::1] gsin,
    double tau,
    double[::1] out,
    Py_ssize_t start,
    Py_ssize_t stop,
):
    cdef Py_ssize_t p, t
    cdef int i
    cdef long long x1, x2, y1, y2, res
    cdef double acc, r, g, ph
    cdef Py_ssize_t nroof = rk1.shape[0]
    cdef Py_ssize_t ng = gk1.shape[0]
    cdef bint has_g = (tau != 0.0) and (g_const != 0.0 or ng > 0)
    with nogil:
        for p in range(start, stop):
            x1 = num1[p]
            x2 = num2[p]
            acc = 0.0
            for i in range(steps):
                r = roof_const
                for t in range(nroof):
                    res = (rk1[t] * x1 + rk2[t] * x2) % den
                    if res < 0:
                        res += den
                    ph = (TWO_PI / den) * res
                    r += rcos[t] * cos(ph) + rsin[t] * sin(ph)
                if has_g:
                    g = g_const
                    for t in range(ng):
                        res = (gk1[t] * x1 + gk2[t] * x2) % den
                        if res < 0:
                            res += den
                        ph = (TWO_PI / den) * res
                        g += gcos[t] * cos(ph) + gsin[t] * sin(ph)
                    acc += r * (1.0 + tau * g)
                else:
                    acc += r
                y1 = (a11 * x1 + a12 * x2) % den
                if y1 < 0:
                    y1 += den
                y2 = (a21 * x1 + a22 * x2) % den
                if y2 < 0:
                    y2 += den
                x1 = y1
                x2 = y2
            out[p] = acc
