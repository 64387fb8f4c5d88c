# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Walsh-Hadamard butterfly (the evolution hot loop)."""

import numpy as np
cimport numpy as cnp

BACKEND = "cython"


def fwht(cnp.complex128_t[::1] a not None):
    """Unnormalized Walsh-Hadamard butterfly, in place."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t h = 1
    cdef Py_ssize_t i, j
    cdef double complex x, y
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2
