"""Sampling of pyramidal (bi-infinite) Schur processes and Plancherel limits.

A pyramidal process is a two-sided sequence of partitions, interlaced toward
a center and eventually empty, weighted by two summable parameter sequences.
Sampling truncates at a random Cantor-pairing index K: the box at K receives
a conditioned draw, boxes below K ordinary draws, boxes above K zeros, and
the finite growth rules do the rest.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from .partitions import EMPTY, Partition, interlaces_h, interlaces_v
from .rng import RandomSource
from .rules import GROW, grow_hh
from .words import Rel, Word

K_BRACKET_REL = 1e-15  # documented resolution of the CDF bracket for K


def cantor_pair(i: int, j: int) -> int:
    """k(i, j) = (i+j)(i+j+1)/2 + j, a bijection N x N -> N."""
    return (i + j) * (i + j + 1) // 2 + j


def cantor_unpair(k: int) -> Tuple[int, int]:
    t = int((math.isqrt(8 * k + 1) - 1) // 2)
    while t * (t + 1) // 2 > k:
        t -= 1
    while (t + 1) * (t + 2) // 2 <= k:
        t += 1
    j = k - t * (t + 1) // 2
    return t - j, j


@dataclass(frozen=True)
class ParamSeq:
    """A nonnegative parameter sequence with a computable tail sum.

    Two generators cover the models in scope: explicit finite lists, and
    geometric families coeff * ratio^i (summable for ratio < 1).
    """

    kind: str
    values: tuple = ()
    coeff: float = 0.0
    ratio: float = 0.0

    @staticmethod
    def finite(values) -> "ParamSeq":
        vals = tuple(float(v) for v in values)
        if any(v < 0 for v in vals):
            raise ValueError("parameters must be nonnegative")
        return ParamSeq("finite", values=vals)

    @staticmethod
    def geometric(coeff: float, ratio: float) -> "ParamSeq":
        if not 0 <= ratio < 1 or coeff < 0:
            raise ValueError("geometric family needs coeff >= 0, 0 <= ratio < 1")
        return ParamSeq("geometric", coeff=float(coeff), ratio=float(ratio))

    def __getitem__(self, i: int) -> float:
        if self.kind == "finite":
            return self.values[i] if i < len(self.values) else 0.0
        return self.coeff * self.ratio**i

    def total(self) -> float:
        return self.tail(0)

    def tail(self, m: int) -> float:
        """Upper bound on sum_{i >= m} of the sequence (exact here)."""
        if self.kind == "finite":
            return float(sum(self.values[m:]))
        return self.coeff * self.ratio**m / (1 - self.ratio)

    def support_bound(self) -> Optional[int]:
        return len(self.values) if self.kind == "finite" else None


@dataclass(frozen=True)
class PyramidalParameters:
    """The (a_i) and (b_j) weight sequences of a pyramidal process."""

    a: ParamSeq
    b: ParamSeq

    def c(self, i: int, j: int, eps: int) -> float:
        ab = self.a[i] * self.b[j]
        return ab if eps == -1 else ab / (1 + ab)

    @staticmethod
    def q_volume(q: float) -> "PyramidalParameters":
        """a_i = b_i = q^(i + 1/2), the q^Volume specialization."""
        if not 0 < q < 1:
            raise ValueError("q must lie in (0,1)")
        g = ParamSeq.geometric(math.sqrt(q), q)
        return PyramidalParameters(g, g)


@dataclass(frozen=True)
class WordConvention:
    """Chooses the relation (plain vs primed) on each side of the center.

    ``left_primed(i)`` picks the relation between lambda(-i-1) and
    lambda(-i); ``right_primed(j)`` between lambda(j) and lambda(j+1).
    """

    left_primed: Callable[[int], bool]
    right_primed: Callable[[int], bool]
    name: str = "custom"

    def epsilon(self, i: int, j: int) -> int:
        return 1 if self.left_primed(i) != self.right_primed(j) else -1

    def box_kind(self, i: int, j: int) -> str:
        lp, rp = self.left_primed(i), self.right_primed(j)
        if not lp:
            return "HH" if not rp else "HV"
        return "VH" if not rp else "VV"

    @staticmethod
    def plane_partitions() -> "WordConvention":
        return WordConvention(lambda i: False, lambda j: False, "plane-partitions")

    @staticmethod
    def pyramid() -> "WordConvention":
        """Alternating relations: the innermost left relation is primed,
        the innermost right one plain."""
        return WordConvention(lambda i: i % 2 == 0, lambda j: j % 2 == 1, "pyramid")


@dataclass
class PyramidalSample:
    lambdas: Dict[int, Partition]
    params: PyramidalParameters
    convention: WordConvention
    seed: Optional[int]
    truncation_index: Optional[int]  # None encodes K = -infinity

    def lam(self, i: int) -> Partition:
        return self.lambdas.get(i, EMPTY)

    def support(self) -> Tuple[int, int]:
        keys = [i for i, v in self.lambdas.items() if v]
        return (min(keys), max(keys)) if keys else (0, 0)

    def validate(self) -> None:
        lo, hi = self.support()
        for i in range(0, hi + 1):
            rel_v = self.convention.right_primed(i)
            lam, nxt = self.lam(i), self.lam(i + 1)
            ok = interlaces_v(lam, nxt) if rel_v else interlaces_h(lam, nxt)
            if not ok:
                raise ValueError(f"interlacing fails between lambda({i}) and lambda({i+1})")
        for i in range(0, -lo + 1):
            rel_v = self.convention.left_primed(i)
            lam, nxt = self.lam(-i), self.lam(-i - 1)
            ok = interlaces_v(lam, nxt) if rel_v else interlaces_h(lam, nxt)
            if not ok:
                raise ValueError(f"interlacing fails between lambda({-i}) and lambda({-i-1})")


class PyramidalSampler:
    """Caches the truncation-index CDF for one parameter set.

    P(K <= k) is the product of (1 - c_ij) over boxes after k in Cantor
    order; prefix log-products plus a certified tail bracket turn sampling K
    into a binary search over a table.  The bracket is resolved to relative
    width 1e-15, an explicit approximation of the idealized real-number
    model.
    """

    def __init__(self, params: PyramidalParameters, convention: WordConvention):
        self.params = params
        self.conv = convention
        self._prefix = [0.0]  # prefix[k] = sum_{k(i,j) < k} log(1 - c_ij)
        self._log_all = None

    def _c_at(self, k: int) -> float:
        i, j = cantor_unpair(k)
        return self.params.c(i, j, self.conv.epsilon(i, j))

    def _extend_prefix(self, upto: int) -> None:
        while len(self._prefix) <= upto:
            k = len(self._prefix) - 1
            c = self._c_at(k)
            if c >= 1:
                i, j = cantor_unpair(k)
                raise ValueError(f"divergent parameter at box {(i, j)}: c = {c}")
            self._prefix.append(self._prefix[-1] + math.log1p(-c))

    def log_p_empty(self) -> float:
        """log P(K = -infinity) = sum over all boxes of log(1 - c)."""
        if self._log_all is not None:
            return self._log_all
        a, b = self.params.a, self.params.b
        t = 4
        while True:
            kmax = cantor_pair(t, 0)  # all boxes with i + j < t are below this
            self._extend_prefix(kmax)
            m = (t + 1) // 2
            s_up = a.tail(m) * b.total() + a.total() * b.tail(m)
            cmax = max(a[m] * b[0], a[0] * b[m])
            if cmax < 1:
                bracket = s_up / (1 - cmax)
                acc = self._prefix[kmax]
                if bracket <= K_BRACKET_REL * max(abs(acc), 1e-6):
                    self._log_all = acc - bracket / 2
                    return self._log_all
            t *= 2
            if t > 1 << 20:
                raise ArithmeticError("tail bound fails to converge")

    def sample_truncation_index(self, src: RandomSource) -> Optional[int]:
        """K distributed as the largest active box index; None means no box
        fired (the empty process)."""
        log_all = self.log_p_empty()
        v = src.uniform()
        log_v = math.log(v)
        if log_v <= log_all:
            return None
        target = log_all - log_v  # want smallest k with prefix[k+1] <= target
        hi = len(self._prefix) - 1
        while self._prefix[hi] > target:
            hi = hi * 2 + 16
            self._extend_prefix(hi)
        lo = 0
        while lo < hi:
            mid = (lo + hi) // 2
            if self._prefix[mid + 1] <= target:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def sample(self, src: RandomSource | int) -> PyramidalSample:
        if isinstance(src, int):
            src = RandomSource(src)
        k = self.sample_truncation_index(src)
        if k is None:
            return PyramidalSample({}, self.params, self.conv, src.seed, None)
        i0, j0 = cantor_unpair(k)
        inputs: Dict[Tuple[int, int], int] = {}
        eps0 = self.conv.epsilon(i0, j0)
        c0 = self.params.c(i0, j0, eps0)
        inputs[(i0, j0)] = 1 if eps0 == 1 else 1 + src.geometric(c0)
        for kk in range(k):
            i, j = cantor_unpair(kk)
            eps = self.conv.epsilon(i, j)
            c = self.params.c(i, j, eps)
            inputs[(i, j)] = src.bernoulli(c) if eps == 1 else src.geometric(c)
        lambdas = grow_pyramidal(self.conv, inputs, i0 + j0 + 1)
        return PyramidalSample(lambdas, self.params, self.conv, src.seed, k)


def grow_pyramidal(
    convention: WordConvention, inputs: Dict[Tuple[int, int], int], m: int
) -> Dict[int, Partition]:
    """Run the growth rules over the m x m corner in decreasing partial
    order; boxes without an entry in ``inputs`` take input 0."""
    tau: Dict[Tuple[int, int], Partition] = {}
    get = tau.get
    for i in range(m - 1, -1, -1):
        for j in range(m - 1, -1, -1):
            u = inputs.get((i, j), 0)
            lam = get((i + 1, j), EMPTY)
            mu = get((i, j + 1), EMPTY)
            kap = get((i + 1, j + 1), EMPTY)
            tau[(i, j)] = GROW[convention.box_kind(i, j)](lam, mu, kap, u)
    out: Dict[int, Partition] = {}
    for i in range(m):
        if tau.get((i, 0), EMPTY):
            out[-i] = tau[(i, 0)]
        if i and tau.get((0, i), EMPTY):
            out[i] = tau[(0, i)]
    return out


def unbounded_schur_sample(
    params: PyramidalParameters,
    convention: WordConvention,
    src: RandomSource | int,
) -> PyramidalSample:
    """One exact sample of the pyramidal Schur process."""
    return PyramidalSampler(params, convention).sample(src)


def truncation_word(convention: WordConvention, m: int) -> Word:
    """The 2m-symbol finite word of the process truncated at a_i = b_i = 0
    for i >= m."""
    lefts = tuple(
        Rel.LV if convention.left_primed(i) else Rel.LH for i in range(m - 1, -1, -1)
    )
    rights = tuple(
        Rel.RV if convention.right_primed(j) else Rel.RH for j in range(m)
    )
    return lefts + rights


def truncation_params(params: PyramidalParameters, m: int) -> tuple:
    a, b = params.a, params.b
    return tuple(a[i] for i in range(m - 1, -1, -1)) + tuple(b[j] for j in range(m))


def rsk_shape(letter_rows: list, nrows: int) -> Partition:
    """Shape of the growth diagram of a 0/1 array with one marked row per
    column; this is the RSK shape of the corresponding word."""
    profile = [EMPTY] * (nrows + 1)
    for letter in letter_rows:
        prev_diag = EMPTY
        for r in range(1, nrows + 1):
            above = profile[r]
            nu = grow_hh(profile[r - 1], above, prev_diag, 1 if letter == r - 1 else 0)
            profile[r] = nu
            prev_diag = above
    return profile[nrows]


def plancherel_sample(theta: float, src: RandomSource | int) -> Partition:
    """Poissonized Plancherel measure: P(lambda) ~ theta^n (f^lambda / n!)^2.

    Draw N ~ Poisson(theta), pass a uniform N-permutation through the growth
    rules, and keep the final shape.
    """
    if isinstance(src, int):
        src = RandomSource(src)
    if theta <= 0:
        raise ValueError("theta must be positive")
    n = src.poisson(theta)
    perm = src.permutation(n)
    return rsk_shape(perm, n)


def mixed_plancherel_sample(a: float, bs, src: RandomSource | int) -> Partition:
    """Mixed exponential/ordinary specialization:
    P(lambda) ~ a^|lambda| (f^lambda / |lambda|!) s_lambda(b_0, b_1, ...).

    Each line i carries an independent Poisson(a * b_i) point count; points
    are ordered uniformly in time and pushed through the growth rules.
    """
    if isinstance(src, int):
        src = RandomSource(src)
    bs = [float(b) for b in bs]
    if a <= 0 or any(b < 0 for b in bs):
        raise ValueError("need a > 0 and nonnegative line intensities")
    letters: list = []
    for i, b in enumerate(bs):
        letters.extend([i] * src.poisson(a * b))
    src.shuffle(letters)
    return rsk_shape(letters, len(bs)) if bs else EMPTY
