"""Lattice walks with unit steps: types, validation, statistics, counting.

A walk is a sequence of +1/-1 increments together with its prefix sums
S_0 = 0, S_1, ..., S_n.  Increments are packed into an integer bitmask
(bit i set means step i is +1), so walks are cheap to hash, compare and
rotate; prefix sums are recomputed on demand and cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import accumulate, combinations
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "WalkError",
    "LatticeWalk",
    "DyckPath",
    "PointedDyck",
    "BernoulliBridge",
    "make_walk",
    "walk_from_bits",
    "range_stat",
    "catalan",
    "bridge_count",
    "walk_count",
    "count_primitives",
    "interpolate",
    "reverse_negate",
    "iter_dyck_paths",
    "iter_bridges",
    "iter_pointed_dycks",
]


class WalkError(ValueError):
    """Raised for malformed walks or out-of-range walk arguments."""


@dataclass(frozen=True)
class LatticeWalk:
    """A +-1 step walk of length ``n``, increments packed into ``up_bits``."""

    n: int
    up_bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise WalkError(f"negative length {self.n}")
        if self.up_bits < 0 or self.up_bits >> self.n:
            raise WalkError("up_bits has bits beyond the walk length")

    # -- derived views -------------------------------------------------

    def step(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise WalkError(f"step index {i} out of range for length {self.n}")
        return 1 if (self.up_bits >> i) & 1 else -1

    @cached_property
    def increments(self) -> tuple[int, ...]:
        bits = self.up_bits
        return tuple(1 if (bits >> i) & 1 else -1 for i in range(self.n))

    @cached_property
    def prefix_sums(self) -> tuple[int, ...]:
        return (0,) + tuple(accumulate(self.increments))

    @property
    def final(self) -> int:
        return 2 * self.up_bits.bit_count() - self.n

    def max(self) -> int:
        return max(self.prefix_sums)

    def min(self) -> int:
        return min(self.prefix_sums)

    # -- classification ------------------------------------------------

    def is_dyck(self) -> bool:
        s = self.prefix_sums
        return self.n % 2 == 0 and s[-1] == 0 and min(s) >= 0

    def is_bridge(self) -> bool:
        return self.n % 2 == 1 and self.final == -1

    def is_pointed_dyck(self) -> bool:
        if self.n % 2 == 0 or self.n == 0:
            return False
        s = self.prefix_sums
        return s[-2] == 0 and s[-1] == -1 and min(s[:-1]) >= 0

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Compact U/D encoding used by the CLI and fixtures."""
        return "".join("U" if (self.up_bits >> i) & 1 else "D" for i in range(self.n))

    @classmethod
    def from_text(cls, text: str) -> "LatticeWalk":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "U":
                bits |= 1 << i
            elif ch != "D":
                raise WalkError(f"invalid step character {ch!r} (expected U or D)")
        return cls(len(text), bits)

    def __str__(self) -> str:
        return self.to_text() or "(empty walk)"


@dataclass(frozen=True)
class DyckPath(LatticeWalk):
    """Nonnegative walk of even length returning to 0."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_dyck():
            raise WalkError(f"not a Dyck path: {self.to_text()!r}")


@dataclass(frozen=True)
class PointedDyck(LatticeWalk):
    """A Dyck path of length 2n with one extra final down step."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_pointed_dyck():
            raise WalkError(f"not a pointed Dyck path: {self.to_text()!r}")

    def dyck_part(self) -> DyckPath:
        return DyckPath(self.n - 1, self.up_bits)


@dataclass(frozen=True)
class BernoulliBridge(LatticeWalk):
    """Walk of odd length 2n+1 ending at -1 (n up steps, n+1 down steps)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_bridge():
            raise WalkError(f"not a bridge: {self.to_text()!r}")


def make_walk(increments: Sequence[int]) -> LatticeWalk:
    """Build a walk from a +-1 sequence, rejecting any other increment."""
    bits = 0
    for i, d in enumerate(increments):
        if d == 1:
            bits |= 1 << i
        elif d != -1:
            raise WalkError(f"increment {d!r} at position {i} is not +1 or -1")
    return LatticeWalk(len(increments), bits)


def walk_from_bits(n: int, up_bits: int, kind: type = LatticeWalk) -> LatticeWalk:
    """Construct a walk (or validated subtype) directly from packed bits."""
    return kind(n, up_bits)


def range_stat(walk: LatticeWalk, a: int, b: int) -> tuple[int, int, int]:
    """Max, min and range (max - min) of the prefix sums over indices [a, b]."""
    if not 0 <= a <= b <= walk.n:
        raise WalkError(f"window [{a}, {b}] invalid for walk of length {walk.n}")
    window = walk.prefix_sums[a : b + 1]
    hi = max(window)
    lo = min(window)
    return hi, lo, hi - lo


# -- counting primitives ------------------------------------------------


def catalan(n: int) -> int:
    """Number of Dyck paths with 2n steps."""
    if n < 0:
        raise WalkError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def bridge_count(n: int) -> int:
    """Number of bridges with 2n+1 steps, equal to (2n+1) * catalan(n)."""
    if n < 0:
        raise WalkError("n must be nonnegative")
    return math.comb(2 * n + 1, n)


def walk_count(m: int, j: int) -> int:
    """Number of m-step walks ending at j; zero on parity mismatch or |j| > m."""
    if m < 0:
        raise WalkError("m must be nonnegative")
    if (m + j) % 2 or abs(j) > m:
        return 0
    return math.comb(m, (m + j) // 2)


class CountSummary(NamedTuple):
    catalan: int
    bridges: int


def count_primitives(n: int) -> CountSummary:
    """Catalan and bridge cardinalities at size n."""
    return CountSummary(catalan(n), bridge_count(n))


# -- interpolation and symmetry ------------------------------------------


def interpolate(walk: LatticeWalk, t: float) -> float:
    """Piecewise-linear rescaled path value at time t in [0, 1].

    Returns n^{-1/2} * (S_floor(nt) + frac(nt) * (S_ceil(nt) - S_floor(nt))),
    so lattice points t = k/n give exactly S_k / sqrt(n).
    """
    if walk.n < 1:
        raise WalkError("interpolation needs a walk of length >= 1")
    if not 0.0 <= t <= 1.0:
        raise WalkError(f"t = {t} outside [0, 1]")
    s = walk.prefix_sums
    nt = walk.n * t
    k = int(math.floor(nt))
    if k >= walk.n:
        return s[walk.n] / math.sqrt(walk.n)
    frac = nt - k
    return (s[k] + frac * (s[k + 1] - s[k])) / math.sqrt(walk.n)


def reverse_negate(bridge: LatticeWalk) -> BernoulliBridge:
    """Time reversal composed with the x-axis flip, as a map of bridges.

    At the increment level the composition is a plain reversal of the step
    list: the new path is R_i = S_N - S_{N-i}, which ends at -1 again,
    is an involution, and swaps the range statistics of the two halves
    (Y over [0, n] of the output equals Y over [n+1, 2n+1] of the input).
    """
    if not bridge.is_bridge():
        raise WalkError("reverse_negate is only defined on bridges")
    n = bridge.n
    if n == 0:
        return BernoulliBridge(0, 0)
    s = format(bridge.up_bits, f"0{n}b")
    return BernoulliBridge(n, int(s[::-1], 2))


# -- exhaustive generation (small n) --------------------------------------


def iter_dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths with 2n steps, by backtracking over valid prefixes."""
    if n == 0:
        yield DyckPath(0, 0)
        return
    length = 2 * n
    # iterative DFS over valid prefixes: state (pos, bits, height)
    todo: list[tuple[int, int, int]] = [(0, 0, 0)]
    while todo:
        pos, bits, height = todo.pop()
        if pos == length:
            yield DyckPath(length, bits)
            continue
        remaining = length - pos
        if height > 0:
            todo.append((pos + 1, bits, height - 1))
        # up step allowed only if the path can still return to zero
        if height + 1 <= remaining - 1:
            todo.append((pos + 1, bits | (1 << pos), height + 1))


def iter_pointed_dycks(n: int) -> Iterator[PointedDyck]:
    """All pointed Dyck paths with 2n+1 steps."""
    for p in iter_dyck_paths(n):
        yield PointedDyck(2 * n + 1, p.up_bits)


def iter_bridges(n: int) -> Iterator[BernoulliBridge]:
    """All bridges with 2n+1 steps (choices of n up-step positions)."""
    length = 2 * n + 1
    for ups in combinations(range(length), n):
        bits = 0
        for i in ups:
            bits |= 1 << i
        yield BernoulliBridge(length, bits)


def exact_probability(favourable: int, total: int) -> Fraction:
    """Exact probability as a reduced fraction; validates 0 <= p <= 1."""
    p = Fraction(favourable, total)
    if not 0 <= p <= 1:
        raise WalkError(f"probability {p} outside [0, 1]")
    return p
