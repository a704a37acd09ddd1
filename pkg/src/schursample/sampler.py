"""Exact sampling of Schur processes by growth of the encoded shape.

``schur_sample`` fills every box of the encoded shape with the reference
local rules and keeps the whole grid; ``in_place_boundary_sample`` produces
the identical output (same seed, same draw order) while storing only one
staircase profile of m + n + 1 partitions, which is the variant to use for
large simulations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .partitions import EMPTY, Partition, interlaces
from .rng import ALGORITHM, RandomSource
from .rules import GROW, grow, shrink
from .words import Rel, ShapePlan, Word, precompute_par

Box = Tuple[int, int]


class DivergenceError(ValueError):
    """A geometric box parameter is >= 1, so the measure does not exist."""

    def __init__(self, box: Box, kind: str, xi):
        self.box, self.kind, self.xi = box, kind, xi
        super().__init__(
            f"box {box} of type {kind} has parameter x*y = {xi} >= 1; "
            "the geometric weight diverges"
        )


@dataclass
class SampleStats:
    boxes: int = 0
    work: int = 0  # candidate-row updates, for the complexity guard


@dataclass
class ProcessSample:
    """Output sequence of a sampling run with enough metadata to replay it."""

    word: Word
    z: tuple
    seed: Optional[int]
    lambdas: Tuple[Partition, ...]
    rng_algorithm: str = ALGORITHM
    stats: Optional[SampleStats] = None
    grid: Optional[Dict[Box, Partition]] = None
    draw_log: Optional[list] = None

    def validate(self) -> None:
        n = len(self.word)
        if len(self.lambdas) != n + 1:
            raise ValueError("lambda sequence has wrong length")
        if self.lambdas[0] != EMPTY or self.lambdas[-1] != EMPTY:
            raise ValueError("sequence must start and end empty")
        for i, rel in enumerate(self.word, start=1):
            if not interlaces(self.lambdas[i - 1], self.lambdas[i], rel):
                raise ValueError(
                    f"lambda({i - 1}) {rel.value} lambda({i}) fails: "
                    f"{self.lambdas[i - 1]} vs {self.lambdas[i]}"
                )

    @property
    def volume(self) -> int:
        return sum(sum(l) for l in self.lambdas)


def check_parameters(plan: ShapePlan) -> None:
    """Reject words whose geometric boxes have divergent parameters, naming
    the first offending box."""
    for i, j in plan.boxes():
        kind = plan.box_type(i, j)
        if kind in ("HH", "VV"):
            xi = plan.param(i, j)
            if not 0 <= xi < 1:
                raise DivergenceError((i, j), kind, xi)
        elif plan.param(i, j) < 0:
            raise ValueError(f"negative parameter at box {(i, j)}")


def draw_box_inputs(plan: ShapePlan, src: RandomSource) -> Dict[Box, int]:
    """Draw the per-box randomness in canonical (row-major) order: one
    geometric for each HH/VV box, one Bernoulli bit for each HV/VH box."""
    inputs: Dict[Box, int] = {}
    for i, j in plan.boxes():
        kind = plan.box_type(i, j)
        xi = float(plan.param(i, j))
        if kind in ("HH", "VV"):
            inputs[(i, j)] = src.geometric(xi)
        else:
            inputs[(i, j)] = src.bernoulli(xi / (1.0 + xi))
    return inputs


def run_growth(
    plan: ShapePlan,
    inputs: Dict[Box, int],
    order: str = "row_major",
    stats: Optional[SampleStats] = None,
) -> Dict[Box, Partition]:
    """Fill the shape with the local rules under the given per-box inputs.

    Any traversal respecting the coordinatewise partial order yields the same
    grid; ``diagonal`` order (by i + j) realizes domino shuffling on Aztec
    words.
    """
    if order == "row_major":
        boxes: Iterable[Box] = plan.boxes()
    elif order == "diagonal":
        boxes = plan.boxes_diagonal()
    else:
        raise ValueError(f"unknown traversal order {order!r}")
    tau: Dict[Box, Partition] = {}
    get = tau.get
    for i, j in boxes:
        lam = get((i - 1, j), EMPTY)
        mu = get((i, j - 1), EMPTY)
        kap = get((i - 1, j - 1), EMPTY)
        nu = grow(plan.box_type(i, j), lam, mu, kap, inputs[(i, j)])
        tau[(i, j)] = nu
        if stats is not None:
            stats.boxes += 1
            stats.work += max(len(lam), len(mu)) + 1
    return tau


def boundary_lambdas(plan: ShapePlan, grid: Dict[Box, Partition]) -> Tuple[Partition, ...]:
    return tuple(grid.get(pt, EMPTY) for pt in plan.boundary_points())


def schur_sample(
    word: Sequence[Rel],
    z: Sequence,
    src: RandomSource | int,
    order: str = "row_major",
    keep_grid: bool = False,
) -> ProcessSample:
    """Draw one exact sample of the Schur process of ``word`` with parameters
    ``z``; the whole growth grid is retained when ``keep_grid`` is set."""
    if isinstance(src, int):
        src = RandomSource(src)
    plan = precompute_par(word, z)
    check_parameters(plan)
    stats = SampleStats()
    inputs = draw_box_inputs(plan, src)
    grid = run_growth(plan, inputs, order=order, stats=stats)
    return ProcessSample(
        word=plan.word,
        z=tuple(z),
        seed=src.seed,
        lambdas=boundary_lambdas(plan, grid),
        stats=stats,
        grid=grid if keep_grid else None,
        draw_log=list(src.draw_log) if src.draw_log is not None else None,
    )


def in_place_boundary_sample(
    word: Sequence[Rel], z: Sequence, src: RandomSource | int
) -> ProcessSample:
    """Same output as ``schur_sample`` (bit-identical for the same seed) with
    peak storage of m + n + 1 partitions."""
    if isinstance(src, int):
        src = RandomSource(src)
    plan = precompute_par(word, z)
    check_parameters(plan)
    stats = SampleStats()
    pi, m, n = plan.pi, plan.m, plan.n
    geom, bern = src.geometric, src.bernoulli
    profile = [EMPTY] * (m + 1)  # profile[i] = tau(i, current row - 1)
    segments = []  # per-row boundary pieces, assembled at the end
    nrows = len(pi)
    for j in range(1, nrows + 1):
        row_len = pi[j - 1]
        kinds = [plan.box_type(i, j) for i in range(1, row_len + 1)]
        xis = [float(plan.param(i, j)) for i in range(1, row_len + 1)]
        prev_diag = profile[0]  # tau(0, j-1) = empty
        for i in range(1, row_len + 1):
            kind = kinds[i - 1]
            xi = xis[i - 1]
            u = geom(xi) if kind in ("HH", "VV") else bern(xi / (1.0 + xi))
            above = profile[i]  # tau(i, j-1)
            lam = profile[i - 1]  # tau(i-1, j), already overwritten
            nu = GROW[kind](lam, above, prev_diag, u)
            stats.boxes += 1
            stats.work += max(len(lam), len(above)) + 1
            profile[i] = nu
            prev_diag = above
        lo = pi[j] if j < nrows else 0
        segments.append([profile[x] for x in range(lo, row_len + 1)])
    lambdas = [EMPTY] * (n - nrows)  # padded empty rows on the vertical axis
    for seg in reversed(segments):
        lambdas.extend(seg)
    lambdas.extend(EMPTY for _ in range(m - (pi[0] if pi else 0) + 1))
    return ProcessSample(
        word=plan.word,
        z=tuple(z),
        seed=src.seed,
        lambdas=tuple(lambdas),
        stats=stats,
        draw_log=list(src.draw_log) if src.draw_log is not None else None,
    )


def reconstruct_inputs(sample: ProcessSample) -> Dict[Box, int]:
    """Recover the per-box random inputs from the output sequence alone.

    Peeling boxes in reverse row-major order inverts each local rule, so the
    returned map equals the draw log of the forward run; running
    ``run_growth`` with it reproduces the identical grid.
    """
    sample.validate()
    plan = precompute_par(sample.word, sample.z)
    tau: Dict[Box, Partition] = {}
    for pt, lam in zip(plan.boundary_points(), sample.lambdas):
        tau[pt] = lam

    def known(i: int, j: int) -> Partition:
        if i == 0 or j <= 0:
            return EMPTY
        return tau[(i, j)]

    inputs: Dict[Box, int] = {}
    for j in range(len(plan.pi), 0, -1):
        for i in range(plan.pi[j - 1], 0, -1):
            kap, rand = shrink(
                plan.box_type(i, j), known(i - 1, j), known(i, j), known(i, j - 1)
            )
            tau[(i - 1, j - 1)] = kap
            inputs[(i, j)] = rand
    return inputs


def replay_draw_order(plan: ShapePlan) -> list:
    """Box order in which the random inputs are drawn (row-major)."""
    return list(plan.boxes())
