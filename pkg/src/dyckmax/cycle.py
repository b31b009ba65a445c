"""The rotation bijection between pointed Dyck paths and bridges.

psi(p, k) rotates the cyclic increment word of a pointed Dyck path p of
length N = 2n+1 by k places (new step i = old step (i+k) mod N).  Every
rotation of p is a bridge, the N rotations of p are pairwise distinct,
and the rotation classes of distinct pointed Dyck paths partition the set
of bridges.  The inverse locates the first index attaining the minimum.

Rotation is index arithmetic on the packed bit word, never an O(N) copy
per class member beyond the single bitmask rebuild.
"""

from __future__ import annotations

from .walks import BernoulliBridge, LatticeWalk, PointedDyck, WalkError

__all__ = ["psi", "psi_inverse", "rotation_class", "first_minimum_index"]


def _rotated_bits(bits: int, k: int, length: int) -> int:
    """Left-rotate an increment bitmask: new bit i = old bit (i+k) mod length."""
    k %= length
    if k == 0:
        return bits
    mask = (1 << k) - 1
    return (bits >> k) | ((bits & mask) << (length - k))


def _as_pointed(p: LatticeWalk) -> PointedDyck:
    if isinstance(p, PointedDyck):
        return p
    return PointedDyck(p.n, p.up_bits)


def psi(p: LatticeWalk, k: int) -> BernoulliBridge:
    """Rotate a pointed Dyck path by k in [1, 2n+1]; k = 2n+1 is the identity."""
    p = _as_pointed(p)
    length = p.n
    if not 1 <= k <= length:
        raise WalkError(f"rotation index {k} outside [1, {length}]")
    return BernoulliBridge(length, _rotated_bits(p.up_bits, k, length))


def first_minimum_index(walk: LatticeWalk) -> int:
    """Smallest index attaining the minimum of the prefix sums."""
    s = walk.prefix_sums
    return s.index(min(s))


def psi_inverse(bridge: LatticeWalk) -> tuple[PointedDyck, int]:
    """The unique (p, k) with psi(p, k) == bridge.

    If the bridge first attains its minimum at index m, rotating its
    increments by m yields the pointed Dyck path of its rotation class,
    and the recovered index is k = 2n+1-m (k = 2n+1 when the bridge is
    itself pointed, i.e. m = 2n+1).
    """
    if not bridge.is_bridge():
        raise WalkError("psi_inverse expects a bridge")
    length = bridge.n
    m = first_minimum_index(bridge)
    p = PointedDyck(length, _rotated_bits(bridge.up_bits, m, length))
    k = length - m if m != length else length
    return p, k


def rotation_class(p: LatticeWalk) -> list[BernoulliBridge]:
    """All 2n+1 rotations of a pointed Dyck path, ordered by k = 1..2n+1."""
    p = _as_pointed(p)
    return [psi(p, k) for k in range(1, p.n + 1)]
