"""Pure-Python band recursion kernel (fallback for the compiled version).

Counts Dyck paths of 2n steps whose running maximum stays at or below a
height cap, by stepping an exact-integer occupation vector over the band
{0..cap} for 2n steps.  Only cells of the correct parity are touched and
cells unreachable in the remaining steps are skipped; a sentinel zero one
past the band keeps the inner update branch-free.
"""

from __future__ import annotations

IMPL = "python"


def band_dyck_count(n: int, h: int) -> int:
    """Number of Dyck paths with 2n steps and maximum <= h (exact integer)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if h <= 0:
        return 0
    width = min(h, n)
    two_n = 2 * n
    c = [0] * (width + 2)  # c[width + 1] is a permanent zero sentinel
    c[0] = 1
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
        if lo <= hi:
            c[lo : hi + 1 : 2] = [
                a + b for a, b in zip(c[lo - 1 : hi : 2], c[lo + 1 : hi + 2 : 2])
            ]
    return c[0]
