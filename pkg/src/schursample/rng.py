"""Seeded random source with entropy accounting.

The generator is CPython's Mersenne Twister (``random.Random``), recorded in
output metadata as ``mt19937``.  Geometric variates use floating-point
inversion k = floor(ln U / ln xi), an O(1) approximation of the real-number
model; exact bit-level geometric sampling is out of scope.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

ALGORITHM = "mt19937"

_MIX = 0x9E3779B97F4A7C15  # golden-ratio increment for derived streams


@dataclass
class EntropyLedger:
    """Counts of the random variates consumed by a sampling run."""

    geometric_draws: int = 0
    bernoulli_draws: int = 0

    @property
    def total(self) -> int:
        return self.geometric_draws + self.bernoulli_draws


class RandomSource:
    """Reproducible stream of geometric / Bernoulli / Poisson variates.

    With ``log_draws=True`` every variate is appended to ``draw_log`` as a
    (kind, parameter, value) triple; the entropy-optimality tests replay
    these logs against reconstructed inputs.
    """

    algorithm = ALGORITHM

    def __init__(self, seed: int, log_draws: bool = False):
        self.seed = int(seed)
        self._rng = random.Random(self.seed)
        self.ledger = EntropyLedger()
        self.draw_log: Optional[List[Tuple[str, float, int]]] = [] if log_draws else None

    def child(self, run_index: int) -> "RandomSource":
        """Independent stream for batch run ``run_index`` (same log setting)."""
        derived = (self.seed + _MIX * (run_index + 1)) % (1 << 64)
        return RandomSource(derived, log_draws=self.draw_log is not None)

    def uniform(self) -> float:
        u = self._rng.random()
        while u <= 0.0:
            u = self._rng.random()
        return u

    def geometric(self, xi: float) -> int:
        """P(k) = (1 - xi) * xi^k for k >= 0; requires 0 <= xi < 1."""
        xi = float(xi)
        if not 0.0 <= xi < 1.0:
            raise ValueError(f"geometric parameter must be in [0,1), got {xi}")
        if xi == 0.0:
            k = 0
        else:
            k = int(math.log(self.uniform()) / math.log(xi))
        self.ledger.geometric_draws += 1
        if self.draw_log is not None:
            self.draw_log.append(("geom", xi, k))
        return k

    def bernoulli(self, p: float) -> int:
        """P(1) = p; degenerate p in {0, 1} consumes no underlying entropy."""
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"bernoulli parameter must be in [0,1], got {p}")
        if p == 0.0:
            b = 0
        elif p == 1.0:
            b = 1
        else:
            b = 1 if self.uniform() < p else 0
        self.ledger.bernoulli_draws += 1
        if self.draw_log is not None:
            self.draw_log.append(("bern", p, b))
        return b

    def poisson(self, theta: float) -> int:
        """Poisson variate by CDF inversion; large means are split additively
        (a Poisson(a+b) is a sum of independent Poisson(a) and Poisson(b))."""
        theta = float(theta)
        if theta < 0:
            raise ValueError("poisson mean must be nonnegative")
        if theta == 0.0:
            return 0
        if theta > 30.0:
            halves = int(math.ceil(theta / 30.0))
            return sum(self.poisson(theta / halves) for _ in range(halves))
        u = self.uniform()
        k = 0
        p = math.exp(-theta)
        cdf = p
        while u > cdf:
            k += 1
            p *= theta / k
            cdf += p
            if p == 0.0:  # float underflow guard far in the tail
                break
        return k

    def shuffle(self, items: list) -> list:
        self._rng.shuffle(items)
        return items

    def permutation(self, n: int) -> list:
        return self.shuffle(list(range(n)))
