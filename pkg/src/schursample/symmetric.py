"""Sampling of right-free (symmetric) Schur processes.

The word is reflected into w . w*, the boundary weight t is folded into the
parameters (z_i -> t^{+-1} z_i), and the square shape is filled one triangle
at a time: off-diagonal boxes share a single draw with their mirror image,
diagonal boxes use the one-sided reflection rules selected by the boundary
mode (free, even rows, or even columns).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Optional, Sequence, Tuple

from .partitions import EMPTY, Partition, conjugate, interlaces
from .rng import ALGORITHM, RandomSource
from .rules import (
    GROW,
    grow_diag_h,
    grow_diag_h_ec,
    grow_diag_h_er,
    grow_diag_v,
    grow_diag_v_ec,
    grow_diag_v_er,
)
from .words import Rel, ShapePlan, Word, precompute_par, symmetrize
from .zfun import MODE_EVEN_COLUMNS, MODE_EVEN_ROWS, MODE_FREE, MODES

Box = Tuple[int, int]


@dataclass
class SymmetricSample:
    """Palindromic output sequence of length 2n + 1; entry n is the free
    partition, constrained by the boundary mode."""

    word: Word
    z: tuple
    t: object
    mode: str
    seed: Optional[int]
    lambdas: Tuple[Partition, ...]
    rng_algorithm: str = ALGORITHM

    @property
    def free_partition(self) -> Partition:
        return self.lambdas[len(self.word)]

    def validate(self) -> None:
        n = len(self.word)
        if len(self.lambdas) != 2 * n + 1:
            raise ValueError("symmetric sequence has wrong length")
        if self.lambdas[0] != EMPTY or self.lambdas[-1] != EMPTY:
            raise ValueError("sequence must start and end empty")
        for i in range(2 * n + 1):
            if self.lambdas[i] != self.lambdas[2 * n - i]:
                raise ValueError("sequence is not palindromic")
        lam = self.free_partition
        if self.mode == MODE_EVEN_ROWS and any(v % 2 for v in lam):
            raise ValueError(f"free partition {lam} has an odd row")
        if self.mode == MODE_EVEN_COLUMNS and any(v % 2 for v in conjugate(lam)):
            raise ValueError(f"free partition {lam} has an odd column")
        wsym, _ = symmetrize(self.word, self.z)
        for i, rel in enumerate(wsym, start=1):
            if not interlaces(self.lambdas[i - 1], self.lambdas[i], rel):
                raise ValueError(f"interlacing fails at step {i}")


def fold_boundary_weight(word: Sequence[Rel], z: Sequence, t):
    """Replace (Z; t) by the equivalent (Z-bar; 1): multiply left-symbol
    parameters by t and divide right-symbol ones."""
    if t == 1:
        return tuple(z)
    return tuple(zz * t if s.left else zz / t for s, zz in zip(word, z))


class _MirrorGrid:
    """Stores only the j >= i triangle; reads below the diagonal mirror."""

    def __init__(self):
        self._tau: Dict[Box, Partition] = {}

    def get(self, i: int, j: int) -> Partition:
        if i > j:
            i, j = j, i
        return self._tau.get((i, j), EMPTY)

    def set(self, i: int, j: int, value: Partition) -> None:
        self._tau[(i, j)] = value


def _check_symmetric_parameters(plan: ShapePlan, mode: str) -> None:
    for i, j in plan.boxes():
        if j < i:
            continue
        kind = plan.box_type(i, j)
        if j == i:
            x = plan.x[i - 1]
            needs_geometric = not (
                (mode == MODE_EVEN_ROWS and kind == "VV")
                or (mode == MODE_EVEN_COLUMNS and kind == "HH")
            )
            xi = x * x if mode in (MODE_EVEN_ROWS, MODE_EVEN_COLUMNS) else x
            if needs_geometric and not 0 <= xi < 1:
                raise ValueError(
                    f"diagonal box {(i, i)} draws Geom({xi}) which diverges"
                )
        elif kind in ("HH", "VV"):
            xi = plan.param(i, j)
            if not 0 <= xi < 1:
                raise ValueError(f"box {(i, j)} has divergent parameter {xi}")


def _diagonal_step(kind: str, mode: str, mu, kap, x, src: RandomSource):
    if kind == "HH":
        if mode == MODE_FREE:
            return grow_diag_h(mu, kap, src.geometric(float(x)))
        if mode == MODE_EVEN_ROWS:
            return grow_diag_h_er(mu, kap, src.geometric(float(x) ** 2))
        return grow_diag_h_ec(mu, kap)
    if kind == "VV":
        if mode == MODE_FREE:
            return grow_diag_v(mu, kap, src.geometric(float(x)))
        if mode == MODE_EVEN_ROWS:
            return grow_diag_v_er(mu, kap)
        return grow_diag_v_ec(mu, kap, src.geometric(float(x) ** 2))
    raise AssertionError(f"diagonal boxes are always HH or VV, got {kind}")


def symmetric_schur_sample(
    word: Sequence[Rel],
    z: Sequence,
    t,
    mode: str,
    src: RandomSource | int,
) -> SymmetricSample:
    """One exact sample of the right-free Schur process of ``word`` with
    parameters (z; t) and the given boundary mode."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if t <= 0:
        raise ValueError("the boundary weight t must be positive")
    if isinstance(src, int):
        src = RandomSource(src)
    word = tuple(word)
    zbar = fold_boundary_weight(word, z, t)
    wsym, zsym = symmetrize(word, zbar)
    plan = precompute_par(wsym, zsym)
    _check_symmetric_parameters(plan, mode)
    grid = _MirrorGrid()
    for i, j in plan.boxes():
        if j < i:
            continue  # mirrored
        kind = plan.box_type(i, j)
        if j > i:
            xi = float(plan.param(i, j))
            if kind in ("HH", "VV"):
                u = src.geometric(xi)
            else:
                u = src.bernoulli(xi / (1.0 + xi))
            nu = GROW[kind](grid.get(i - 1, j), grid.get(i, j - 1), grid.get(i - 1, j - 1), u)
        else:
            nu = _diagonal_step(
                kind, mode, grid.get(i - 1, i), grid.get(i - 1, i - 1), plan.x[i - 1], src
            )
        grid.set(i, j, nu)
    lambdas = tuple(grid.get(i, j) for i, j in plan.boundary_points())
    return SymmetricSample(
        word=word, z=tuple(z), t=t, mode=mode, seed=src.seed, lambdas=lambdas
    )


def symmetric_weight(sample: SymmetricSample):
    """Unnormalized weight t^|free| * prod z_i^(|weight changes|) over the
    first n steps; exact when the parameters are."""
    n = len(sample.word)
    exact = all(isinstance(v, Rational) for v in sample.z) and isinstance(
        sample.t, Rational
    )
    w = Fraction(1) if exact else 1.0
    tt = Fraction(sample.t) if exact else float(sample.t)
    w *= tt ** sum(sample.free_partition)
    for i in range(1, n + 1):
        zz = Fraction(sample.z[i - 1]) if exact else float(sample.z[i - 1])
        w *= zz ** abs(sum(sample.lambdas[i]) - sum(sample.lambdas[i - 1]))
    return w
