"""Integer partitions as plain tuples, plus interlacing and Maya diagrams.

A partition is a tuple of weakly decreasing positive integers; ``()`` is the
empty partition.  All functions treat partitions as having an implicit
infinite tail of zero parts, so ``part(lam, i)`` is total.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def make(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of row lengths into a partition tuple.

    Trailing zeros are trimmed; raises ValueError if the remaining parts are
    not weakly decreasing positive integers.
    """
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    for i, v in enumerate(p):
        if v <= 0:
            raise ValueError(f"parts must be positive, got {v}")
        if i and p[i - 1] < v:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return tuple(p)


def is_partition(p: Sequence[int]) -> bool:
    return all(p[i] >= p[i + 1] for i in range(len(p) - 1)) and (not p or p[-1] >= 1)


def part(lam: Partition, i: int) -> int:
    """1-based part accessor; 0 beyond the stored length."""
    if i < 1:
        raise ValueError(f"part index must be >= 1, got {i}")
    return lam[i - 1] if i <= len(lam) else 0


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: result_i = #{j : lam_j >= i}."""
    if not lam:
        return EMPTY
    out = [0] * lam[0]
    for v in lam:
        for i in range(v):
            out[i] += 1
    return tuple(out)


def contains(lam: Partition, mu: Partition) -> bool:
    """mu is a subdiagram of lam."""
    return len(mu) <= len(lam) and all(lam[i] >= mu[i] for i in range(len(mu)))


def interlaces_h(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in the horizontal-strip sense: lam1 >= mu1 >= lam2 >= mu2 ..."""
    n = max(len(lam), len(mu))
    for i in range(1, n + 1):
        if part(lam, i) < part(mu, i) or part(mu, i) < part(lam, i + 1):
            return False
    return True


def interlaces_v(lam: Partition, mu: Partition) -> bool:
    """lam/mu is a vertical strip: 0 <= lam_i - mu_i <= 1 for all i."""
    n = max(len(lam), len(mu))
    return all(0 <= part(lam, i) - part(mu, i) <= 1 for i in range(1, n + 1))


def interlaces(lam: Partition, mu: Partition, rel) -> bool:
    """Check ``lam rel mu`` for a relation symbol from :mod:`schursample.words`.

    The two left symbols are defined by swapping arguments of the right ones,
    so ``interlaces(lam, mu, LH)`` means mu >= lam (a horizontal strip mu/lam).
    """
    if rel.left:
        lam, mu = mu, lam
    return interlaces_v(lam, mu) if rel.primed else interlaces_h(lam, mu)


@dataclass(frozen=True)
class MayaWindow:
    """A finite window of a Maya diagram.

    Positions are half-integers stored doubled: cell k sits at doubled
    position ``offset + 2*k``.  Everything left of the window is a particle,
    everything right of it a hole.
    """

    offset: int
    cells: tuple  # tuple[bool, ...]; True = particle

    def positions(self):
        return [self.offset + 2 * k for k in range(len(self.cells))]


def to_maya(lam: Partition, shift: int = 0, window: tuple | None = None) -> MayaWindow:
    """Maya diagram of ``lam``: particles at lam_i - i + 1/2 + shift.

    ``window`` is an optional (lo, hi) pair of doubled half-integer positions
    (odd integers, inclusive); it must cover every position where the diagram
    differs from the vacuum, otherwise ValueError is raised.
    """
    lo_dev = 2 * (shift - len(lam)) + 1
    hi_dev = 2 * (shift + part(lam, 1)) - 1
    if window is None:
        lo, hi = (lo_dev, hi_dev) if lam else (2 * shift - 1, 2 * shift + 1)
    else:
        lo, hi = window
        if lo % 2 == 0 or hi % 2 == 0:
            raise ValueError("window bounds must be doubled half-integers (odd)")
        if lam and (lo > lo_dev or hi < hi_dev):
            raise ValueError("window too small: Maya diagram would be truncated")
    particles = {2 * (lam[i] - (i + 1)) + 1 + 2 * shift for i in range(len(lam))}
    # below the stored parts the diagram is the vacuum: particles at -i+1/2+shift
    vacuum_top = 2 * (shift - len(lam)) - 1
    cells = tuple(
        pos in particles or pos <= vacuum_top for pos in range(lo, hi + 1, 2)
    )
    return MayaWindow(lo, cells)


def from_maya(m: MayaWindow) -> Partition:
    """Recover the partition by counting holes to the left of each particle."""
    holes = 0
    rows = []
    for c in m.cells:
        if c:
            rows.append(holes)
        else:
            holes += 1
    rows.reverse()
    return make(rows)


def partitions_of(n: int):
    """All partitions of weight exactly n, lexicographically."""
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for v in range(min(rem, maxpart), 0, -1):
            acc.append(v)
            rec(rem - v, v, acc)
            acc.pop()

    rec(n, n, [])
    return out


def partitions_up_to(n: int):
    """All partitions of weight <= n."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out
