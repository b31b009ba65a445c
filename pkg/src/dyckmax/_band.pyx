# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled band recursion kernel.

Same algorithm as the pure-Python fallback in ``_band_py``: an in-place
exact-integer occupation vector stepped over the height band {0..cap}.
The integers are arbitrary precision (Python objects); Cython removes the
interpreter overhead of the inner sweep, which dominates at large n.
"""

IMPL = "cython"


def band_dyck_count(Py_ssize_t n, Py_ssize_t h):
    """Number of Dyck paths with 2n steps and maximum <= h (exact integer)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if h <= 0:
        return 0
    cdef Py_ssize_t width = h if h < n else n
    cdef Py_ssize_t two_n = 2 * n
    cdef list c = [0] * (width + 2)  # c[width + 1] is a permanent zero sentinel
    c[0] = 1
    cdef Py_ssize_t t, v, hi, lo, rem, parity
    for t in range(two_n):
        parity = (t + 1) & 1
        hi = t + 1
        if hi > width:
            hi = width
        rem = two_n - t - 1  # heights above this cannot return to zero
        if hi > rem:
            hi = rem
        if parity == 0:
            c[0] = c[1]
            lo = 2
        else:
            lo = 1
        for v in range(lo, hi + 1, 2):
            c[v] = c[v - 1] + c[v + 1]
    return c[0]
