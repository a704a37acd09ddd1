"""Closed-form partition functions for finite, free-boundary, and pyramidal
Schur processes.

Values are exact rationals whenever every parameter is rational and the word
is short enough (<= 40 symbols); otherwise they are carried in log space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence

from .words import Rel, epsilon

MODE_FREE = "free"
MODE_EVEN_ROWS = "even_rows"
MODE_EVEN_COLUMNS = "even_columns"
MODES = (MODE_FREE, MODE_EVEN_ROWS, MODE_EVEN_COLUMNS)

EXACT_WORD_LIMIT = 40


@dataclass(frozen=True)
class ZValue:
    """A positive normalizing constant, possibly divergent.

    ``exact`` is set in the rational regime; ``log`` always holds the natural
    log of the value when finite.
    """

    finite: bool
    exact: Optional[Fraction] = None
    log: Optional[float] = None

    def __float__(self) -> float:
        if not self.finite:
            return math.inf
        return float(self.exact) if self.exact is not None else math.exp(self.log)

    def __str__(self) -> str:
        if not self.finite:
            return "divergent"
        if self.exact is not None:
            return str(self.exact)
        if abs(self.log) < 690:  # exp stays within double range
            return f"{math.exp(self.log):.12g}"
        return f"exp({self.log:.12g})"


def _all_rational(values) -> bool:
    return all(isinstance(v, Rational) for v in values)


class _Accumulator:
    """Multiplies factors (1 + e*x)^e exactly or in log space."""

    def __init__(self, exact_mode: bool):
        self.exact_mode = exact_mode
        self.value = Fraction(1) if exact_mode else None
        self.log = 0.0
        self.finite = True

    def mul(self, x, e: int):
        if not self.finite:
            return
        if e == -1 and x >= 1:
            self.finite = False
            return
        if self.exact_mode:
            x = Fraction(x)
            self.value = self.value * (1 + x) if e == 1 else self.value / (1 - x)
        self.log += math.log1p(float(x)) if e == 1 else -math.log1p(-float(x))

    def result(self) -> ZValue:
        if not self.finite:
            return ZValue(finite=False)
        return ZValue(True, self.value if self.exact_mode else None, self.log)


def z_finite(word: Sequence[Rel], z: Sequence) -> ZValue:
    """Partition function of the finite Schur process: the product of
    (1 + eps_ij z_i z_j)^eps_ij over left-before-right index pairs, with
    eps = +1 exactly for the mixed (primed/unprimed) pairs."""
    word = tuple(word)
    if len(z) != len(word):
        raise ValueError("parameter list does not match word length")
    acc = _Accumulator(_all_rational(z) and len(word) <= EXACT_WORD_LIMIT)
    for i in range(len(word)):
        if not word[i].left:
            continue
        for j in range(i + 1, len(word)):
            if word[j].left:
                continue
            acc.mul(z[i] * z[j], epsilon(word[i], word[j]))
    return acc.result()


def z_symmetric(word: Sequence[Rel], z: Sequence, t, mode: str = MODE_FREE) -> ZValue:
    """Partition function of the right-free Schur process with boundary
    weight t^|free partition|, in the plain, even-rows, or even-columns
    flavor."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    word = tuple(word)
    if len(z) != len(word):
        raise ValueError("parameter list does not match word length")
    acc = _Accumulator(_all_rational(z) and isinstance(t, Rational)
                       and len(word) <= EXACT_WORD_LIMIT)
    for i, s in enumerate(word):
        if not s.left:
            continue
        if mode == MODE_FREE:
            acc.mul(t * z[i], -1)
        elif mode == MODE_EVEN_ROWS and s == Rel.LH:
            acc.mul((t * z[i]) ** 2, -1)
        elif mode == MODE_EVEN_COLUMNS and s == Rel.LV:
            acc.mul((t * z[i]) ** 2, -1)
    for i in range(len(word)):
        if not word[i].left:
            continue
        for j in range(i + 1, len(word)):
            if word[j].left:
                # delta = -1 when the two left symbols are equal
                delta = -1 if word[i] == word[j] else 1
                acc.mul(t * t * z[i] * z[j], delta)
            else:
                acc.mul(z[i] * z[j], epsilon(word[i], word[j]))
    return acc.result()


def z_pyramidal(params, convention, rel_tol: float = 1e-10, order: str = "cantor") -> ZValue:
    """Infinite product (1 + eps_ij a_i b_j)^eps_ij over i, j >= 0, evaluated
    until the remaining-mass bound certifies relative error <= rel_tol.

    ``order`` chooses the accumulation order: "cantor" walks anti-diagonals
    (the pairing-function order), "rows" walks growing squares; absolutely
    convergent products agree.
    """
    a, b = params.a, params.b
    log_acc = 0.0

    def term(i: int, j: int) -> Optional[float]:
        c = a[i] * b[j]
        e = convention.epsilon(i, j)
        if e == -1 and c >= 1:
            return None
        return math.log1p(c) if e == 1 else -math.log1p(-c)

    if order not in ("cantor", "rows"):
        raise ValueError(f"unknown accumulation order {order!r}")
    block = 8
    processed = 0  # number of complete anti-diagonals / side of the square
    while True:
        if order == "cantor":
            for t in range(processed, processed + block):
                for j in range(t + 1):
                    v = term(t - j, j)
                    if v is None:
                        return ZValue(finite=False)
                    log_acc += v
        else:
            hi = processed + block
            for i in range(hi):
                for j in range(hi):
                    if i < processed and j < processed:
                        continue
                    v = term(i, j)
                    if v is None:
                        return ZValue(finite=False)
                    log_acc += v
        processed += block
        # the unprocessed region lies outside the m x m square
        m = (processed + 1) // 2 if order == "cantor" else processed
        tail = a.tail(m) * b.total() + a.total() * b.tail(m)
        cmax = max(a[m] * b[0], a[0] * b[m], 0.0)
        if cmax < 1 and tail / (1 - cmax) <= rel_tol * max(abs(log_acc), 1e-3):
            return ZValue(True, None, log_acc)
        block *= 2
        if processed > 1 << 20:
            raise ArithmeticError("pyramidal partition function tail does not shrink")
