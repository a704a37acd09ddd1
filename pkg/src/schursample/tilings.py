"""Codecs between interlaced partition sequences and concrete tiling models.

Conventions for steep tilings (pinned against the 2x2 Aztec diamond and the
width-5 pyramid reconstructions in the tests):

* diagonal k of the tiling carries the Maya diagram of lambda(k), shifted
  upward by sigma_k = #{i <= k : w_i is < or >'} (the vertical steps of the
  minimal tiling path);
* a domino always spans two consecutive diagonals k, k+1 and links position
  p to p (horizontal domino) or p to p+1 (vertical domino);
* the dominoes between k and k+1 pair the particles of the two diagonals
  when w_{k+1} is primed and the holes otherwise, row by row; their sign is
  negative (particle cells) in the primed case, positive in the plain case.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .partitions import (
    MayaWindow,
    Partition,
    conjugate,
    from_maya,
    part,
)
from .words import Rel, Word


class CodecError(ValueError):
    pass


# ---------------------------------------------------------------------------
# reverse plane partitions

@dataclass(frozen=True)
class HeightMatrix:
    """A reverse plane partition: ``rows[r-1]`` is row r (the r-th part of
    the shape, drawn at the bottom in French convention), non-decreasing
    along rows and up columns."""

    shape: Partition
    rows: tuple  # tuple[tuple[int, ...], ...]

    def entry(self, c: int, r: int) -> int:
        return self.rows[r - 1][c - 1]

    def validate(self) -> None:
        if tuple(len(r) for r in self.rows) != self.shape:
            raise CodecError("row lengths do not match the shape")
        for r, row in enumerate(self.rows, start=1):
            for c in range(1, len(row) + 1):
                if c > 1 and row[c - 2] > row[c - 1]:
                    raise CodecError(f"row {r} decreases at column {c}")
                if r > 1 and c <= len(self.rows[r - 2]) and self.rows[r - 2][c - 1] > row[c - 1]:
                    raise CodecError(f"column {c} decreases at row {r}")


def to_plane_partition(word: Sequence[Rel], lambdas: Sequence[Partition]) -> HeightMatrix:
    """Fold an unprimed interlaced sequence into the reverse plane partition
    whose diagonal slices are the lambda(k)."""
    word = tuple(word)
    if any(s.primed for s in word):
        raise CodecError("plane partitions need an unprimed word")
    shape = _encoded_shape_padded(word)
    n = sum(1 for s in word if not s.left)
    rows: List[List[int]] = [[0] * ln for ln in shape]
    for r in range(1, len(shape) + 1):
        for c in range(1, shape[r - 1] + 1):
            k = (c - r) + n
            lam = lambdas[k]
            depth = _diag_depth(shape, c, r)
            rows[r - 1][c - 1] = part(lam, depth)
    hm = HeightMatrix(tuple(shape), tuple(tuple(r) for r in rows))
    hm.validate()
    return hm


def _encoded_shape_padded(word: Word) -> Partition:
    lefts = 0
    parts = []
    for s in word:
        if s.left:
            lefts += 1
        else:
            parts.append(lefts)
    parts.reverse()
    return tuple(p for p in parts if p)


def _diag_depth(shape: Partition, c: int, r: int) -> int:
    """1 + number of shape boxes strictly up-right of (c, r) on its
    diagonal; the outermost box has depth 1."""
    depth = 0
    while r + depth + 1 <= len(shape) and c + depth + 1 <= shape[r + depth]:
        depth += 1
    return depth + 1


def from_plane_partition(word: Sequence[Rel], hm: HeightMatrix) -> Tuple[Partition, ...]:
    """Read the diagonal slices back; inverse of :func:`to_plane_partition`."""
    word = tuple(word)
    hm.validate()
    n = sum(1 for s in word if not s.left)
    out: List[Partition] = []
    for k in range(len(word) + 1):
        d = k - n
        vals = []
        for r in range(1, len(hm.shape) + 1):
            c = r + d
            if 1 <= c <= hm.shape[r - 1]:
                vals.append(hm.entry(c, r))
        vals.sort(reverse=True)
        out.append(tuple(v for v in vals if v))
    return tuple(out)


# ---------------------------------------------------------------------------
# steep tilings

@dataclass(frozen=True, order=True)
class Domino:
    """One domino in diagonal coordinates: it covers the cell at doubled
    Maya position ``pos2`` on diagonal ``k`` and the cell at ``pos2 + 2``
    (vertical) or ``pos2`` (horizontal) on diagonal k + 1."""

    k: int
    pos2: int
    vertical: bool
    sign: int  # +1: both cells are holes; -1: both are particles

    def cells(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.k, self.pos2), (self.k + 1, self.pos2 + (2 if self.vertical else 0))


@dataclass
class DominoTiling:
    word: Word
    window: Tuple[int, int]  # doubled positions [lo, hi] covered per diagonal
    dominoes: tuple  # tuple[Domino, ...], sorted

    @property
    def shifts(self) -> Tuple[int, ...]:
        return word_shifts(self.word)

    def domino_set(self) -> frozenset:
        return frozenset(self.dominoes)


def word_shifts(word: Sequence[Rel]) -> Tuple[int, ...]:
    """sigma_k for k = 0..n: vertical steps of the minimal-tiling path."""
    out = [0]
    for s in word:
        out.append(out[-1] + (1 if s in (Rel.LH, Rel.RV) else 0))
    return tuple(out)


def is_steep_word(word: Sequence[Rel]) -> bool:
    """Odd positions primed, even positions plain (1-based), even length."""
    word = tuple(word)
    if len(word) % 2:
        return False
    return all(s.primed == (i % 2 == 0) for i, s in enumerate(word))


def _particles(lam: Partition, shift: int, rows: int) -> List[int]:
    """Doubled positions of the first ``rows`` particles (by row index)."""
    return [2 * (part(lam, i) - i + shift) + 1 for i in range(1, rows + 1)]


def _holes(lam: Partition, shift: int, rows: int) -> List[int]:
    conj = conjugate(lam)
    return [2 * (i - part(conj, i) + shift) - 1 for i in range(1, rows + 1)]


def to_steep_tiling(
    word: Sequence[Rel],
    lambdas: Sequence[Partition],
    window: Optional[Tuple[int, int]] = None,
) -> DominoTiling:
    """Encode an interlaced sequence of a steep word as a domino tiling.

    ``window`` (doubled positions, odd bounds) fixes which part of the
    infinite strip is materialized; it defaults to the deviation range of
    the sequence plus one frame domino on each side.
    """
    word = tuple(word)
    if not is_steep_word(word):
        raise CodecError("not a steep word: needs alternating primed/plain symbols")
    shifts = word_shifts(word)
    if window is None:
        lo = min(
            (2 * (shifts[k] - len(lambdas[k])) - 1 for k in range(len(lambdas))),
        ) - 2
        hi = max(
            (2 * (shifts[k] + part(lambdas[k], 1)) + 1 for k in range(len(lambdas))),
        ) + 2
        window = (lo, hi)
    lo, hi = window
    if lo % 2 == 0 or hi % 2 == 0:
        raise CodecError("window bounds must be doubled half-integers (odd)")
    dominoes: List[Domino] = []
    for k, rel in enumerate(word):
        lam, nxt = lambdas[k], lambdas[k + 1]
        # enough rows that both Maya diagrams are in their vacuum tails
        rows = max(len(lam), len(nxt)) + (hi - lo) // 2 + len(word) + 2
        if rel.primed:
            src = _particles(lam, shifts[k], rows)
            dst = _particles(nxt, shifts[k + 1], rows)
            sign = -1
        else:
            src = _holes(lam, shifts[k], rows)
            dst = _holes(nxt, shifts[k + 1], rows)
            sign = 1
        for p, q in zip(src, dst):
            if q - p not in (0, 2):
                raise CodecError(
                    f"sequence does not interlace at step {k + 1}: "
                    f"mark moves from {p} to {q}"
                )
            if lo <= p <= hi or lo <= q <= hi:
                dominoes.append(Domino(k, p, q - p == 2, sign))
    return DominoTiling(word, window, tuple(sorted(dominoes)))


def from_steep_tiling(tiling: DominoTiling) -> Tuple[Partition, ...]:
    """Decode the per-diagonal Maya diagrams back into partitions."""
    lo, hi = tiling.window
    n = len(tiling.word)
    marks: List[Dict[int, bool]] = [dict() for _ in range(n + 1)]
    for d in tiling.dominoes:
        for k, p in d.cells():
            if 0 <= k <= n and lo <= p <= hi:
                if p in marks[k] and marks[k][p] != (d.sign < 0):
                    raise CodecError(f"conflicting dominoes at diagonal {k}, {p}")
                marks[k][p] = d.sign < 0
    out = []
    for k in range(n + 1):
        # interior diagonals are fully covered (particles by the primed-step
        # matching on one side, holes by the plain-step one on the other);
        # diagonal 0 only stores its particles, diagonal n only its holes
        default = k == n
        cells = tuple(
            marks[k].get(p, default) for p in range(lo, hi + 1, 2)
        )
        out.append(from_maya(MayaWindow(lo, cells)))
    return tuple(out)


def flip_distance_check(tiling: DominoTiling) -> int:
    """Number of flips from the minimal tiling: the volume of the decoded
    sequence (each flip adds or removes one box on one diagonal)."""
    return sum(sum(l) for l in from_steep_tiling(tiling))


def enumerate_flips(tiling: DominoTiling) -> List[Tuple[Domino, Domino]]:
    """All flippable 2x2 blocks, as the pair of dominoes to replace."""
    have = tiling.domino_set()
    out = []
    for d in tiling.dominoes:
        if d.vertical:
            partner = Domino(d.k + 1, d.pos2, True, -d.sign)
            if partner in have:
                out.append((d, partner))
        else:
            partner = Domino(d.k + 1, d.pos2 + 2, False, -d.sign)
            if partner in have:
                out.append((d, partner))
    return out


def apply_flip(tiling: DominoTiling, pair: Tuple[Domino, Domino]) -> DominoTiling:
    a, b = pair
    assert b.k == a.k + 1
    have = set(tiling.dominoes)
    have.discard(a)
    have.discard(b)
    if a.vertical:
        have.add(Domino(a.k, a.pos2, False, a.sign))
        have.add(Domino(a.k + 1, a.pos2 + 2, False, b.sign))
    else:
        have.add(Domino(a.k, a.pos2, True, a.sign))
        have.add(Domino(a.k + 1, a.pos2, True, b.sign))
    return DominoTiling(tiling.word, tiling.window, tuple(sorted(have)))


def aztec_cell(n: int, k: int, pos2: int) -> bool:
    """Does the diagonal-k cell at doubled Maya position pos2 lie in the
    size-n Aztec diamond?  The Maya position is the doubled vertical offset
    of the square center from the region center; the horizontal offset
    follows from the diagonal index."""
    cy2 = pos2
    cx2 = pos2 + 2 * (n - k)
    return abs(cx2) + abs(cy2) <= 2 * n


def aztec_region_dominoes(tiling: DominoTiling, n: int) -> frozenset:
    return frozenset(
        d
        for d in tiling.dominoes
        if all(aztec_cell(n, k, p) for k, p in d.cells())
    )


# ---------------------------------------------------------------------------
# plane overpartitions

@dataclass(frozen=True)
class OverpartitionTableau:
    """Shape-filling by integers with overline flags; an overlined k stands
    for the half-integer k - 1/2."""

    shape: Partition
    rows: tuple  # tuple[tuple[(int, bool), ...], ...]

    def numeric(self, c: int, r: int) -> float:
        v, over = self.rows[r - 1][c - 1]
        return v - 0.5 if over else float(v)

    def validate(self) -> None:
        if tuple(len(r) for r in self.rows) != self.shape:
            raise CodecError("row lengths do not match the shape")
        for r, row in enumerate(self.rows, start=1):
            for c in range(2, len(row) + 1):
                if self.numeric(c - 1, r) < self.numeric(c, r):
                    raise CodecError(f"row {r} increases at column {c}")
            # only the last occurrence of an integer may be overlined
            for c in range(1, len(row)):
                v, over = row[c - 1]
                if over and c < len(row) and row[c][0] == v:
                    raise CodecError(f"non-final overline of {v} in row {r}")
        ncols = self.shape[0] if self.shape else 0
        for c in range(1, ncols + 1):
            col = [
                self.rows[r - 1][c - 1]
                for r in range(1, len(self.shape) + 1)
                if self.shape[r - 1] >= c
            ]
            for idx in range(1, len(col)):
                if col[idx - 1][0] == col[idx][0] and not col[idx][1]:
                    raise CodecError(f"repeated {col[idx][0]} in column {c} not overlined")
            for idx in range(1, len(col)):
                if self.numeric(c, idx) < self.numeric(c, idx + 1):
                    raise CodecError(f"column {c} increases at row {idx + 1}")


def overpartition_word(n: int) -> Word:
    return (Rel.LH, Rel.LV) * n


def to_plane_overpartition(
    word: Sequence[Rel], lambdas: Sequence[Partition]
) -> OverpartitionTableau:
    """Encode a right-free sequence of word (<, <')^n as a plane
    overpartition: lambda(i) is the set of cells with value > n - i/2."""
    word = tuple(word)
    n2 = len(word)
    if n2 % 2 or word != overpartition_word(n2 // 2):
        raise CodecError("plane overpartitions need the word (<<')^n")
    n = n2 // 2
    if len(lambdas) < n2 + 1:
        raise CodecError("need the right-free sequence up to the free partition")
    shape = lambdas[n2]
    rows: List[List[Tuple[int, bool]]] = []
    for r in range(1, len(shape) + 1):
        row = []
        for c in range(1, shape[r - 1] + 1):
            first = next(
                i for i in range(n2 + 1) if part(lambdas[i], r) >= c
            )
            if first % 2:
                row.append((n - (first - 1) // 2, False))
            else:
                row.append((n - first // 2 + 1, True))
        rows.append(tuple(row))
    tab = OverpartitionTableau(tuple(shape), tuple(rows))
    tab.validate()
    return tab


def from_plane_overpartition(tab: OverpartitionTableau, n: int) -> Tuple[Partition, ...]:
    """Level sets of the tableau: lambda(i) collects cells with numeric
    value above n - i/2."""
    tab.validate()
    out = []
    for i in range(2 * n + 1):
        threshold = n - i / 2
        rows = []
        for r in range(1, len(tab.shape) + 1):
            cnt = sum(
                1
                for c in range(1, tab.shape[r - 1] + 1)
                if tab.numeric(c, r) > threshold
            )
            rows.append(cnt)
        out.append(tuple(v for v in rows if v))
    return tuple(out)
