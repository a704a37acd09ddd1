"""Interlacing words, encoded shapes, and the box-type precomputation.

The compact ASCII syntax for words is ``<`` and ``>`` with an optional ``'``
suffix for the primed symbols, plus ``(...)^n`` repetition, e.g. ``"(<'>)^2"``
for the size-2 Aztec diamond word.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

from .partitions import Partition, make


class Rel(Enum):
    """One of the four interlacing relation symbols."""

    LH = "<"
    RH = ">"
    LV = "<'"
    RV = ">'"

    @property
    def left(self) -> bool:
        return self in (Rel.LH, Rel.LV)

    @property
    def primed(self) -> bool:
        return self in (Rel.LV, Rel.RV)

    @property
    def inverse(self) -> "Rel":
        return {Rel.LH: Rel.RH, Rel.RH: Rel.LH, Rel.LV: Rel.RV, Rel.RV: Rel.LV}[self]

    def __repr__(self):
        return f"Rel({self.value!r})"


Word = Tuple[Rel, ...]

_TOKEN = re.compile(r"\s*(?:(<'|>'|<|>)|(\()|(\)\s*\^\s*(\d+)))")


def parse_word(text: str) -> Word:
    """Parse the ASCII word syntax; raises ValueError on bad input."""
    out: List[Rel] = []
    stack: List[int] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad word syntax at {text[pos:]!r}")
        pos = m.end()
        sym, open_, close, rep = m.group(1), m.group(2), m.group(3), m.group(4)
        if sym:
            out.append(Rel(sym))
        elif open_:
            stack.append(len(out))
        else:
            if not stack:
                raise ValueError("unbalanced ')' in word")
            start = stack.pop()
            out[start:] = out[start:] * int(rep)
    if stack:
        raise ValueError("unbalanced '(' in word")
    return tuple(out)


def format_word(w: Sequence[Rel]) -> str:
    return "".join(s.value for s in w)


def encoded_shape(w: Sequence[Rel]) -> Partition:
    """Young diagram whose boundary path records the word.

    Part k of the result is the number of left symbols preceding the k-th
    right symbol counted from the end of the word.
    """
    lefts = 0
    parts = []
    for s in w:
        if s.left:
            lefts += 1
        else:
            parts.append(lefts)
    parts.reverse()
    return make(parts)


BOX_HH = "HH"
BOX_HV = "HV"
BOX_VH = "VH"
BOX_VV = "VV"


def box_kind(left: Rel, right: Rel) -> str:
    """Local-rule type of a box whose column symbol is ``left`` and row
    symbol is ``right``."""
    if left == Rel.LH:
        return BOX_HH if right == Rel.RH else BOX_HV
    return BOX_VH if right == Rel.RH else BOX_VV


def epsilon(left: Rel, right: Rel) -> int:
    """+1 for the Bernoulli (mixed) pairs, -1 for the geometric pairs.

    This one predicate feeds both the samplers (via box_kind) and the
    partition-function evaluators, so the sign conventions cannot drift.
    """
    return 1 if box_kind(left, right) in (BOX_HV, BOX_VH) else -1


@dataclass(frozen=True)
class ShapePlan:
    """Precomputed data for filling the encoded shape of a word.

    ``pi`` is the encoded shape; boxes are indexed (i, j) with j the row
    (row 1 = first part of pi) and 1 <= i <= pi_j.  ``u``/``x`` list the left
    symbols and their parameters in word order; ``v``/``y`` list the right
    symbols and parameters with v[0] belonging to the *last* right symbol of
    the word (that is the row-1 symbol of the shape).
    """

    word: Word
    pi: Partition
    x: tuple
    y: tuple
    u: Tuple[Rel, ...]
    v: Tuple[Rel, ...]

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.y)

    def box_type(self, i: int, j: int) -> str:
        return box_kind(self.u[i - 1], self.v[j - 1])

    def param(self, i: int, j: int):
        return self.x[i - 1] * self.y[j - 1]

    def boxes(self):
        """Row-major box order (the default fill order)."""
        for j in range(1, len(self.pi) + 1):
            for i in range(1, self.pi[j - 1] + 1):
                yield i, j

    def boxes_diagonal(self):
        """Boxes by increasing i+j; realizes domino shuffling on Aztec words."""
        order = sorted(self.boxes(), key=lambda b: (b[0] + b[1], b[1]))
        yield from order

    def boundary_points(self):
        """Lattice points on the boundary of pi (padded with empty rows up to
        the number of right symbols), clockwise from (0, n) on the vertical
        axis to (m, 0) on the horizontal axis; point k carries lambda(k)."""
        i, j = 0, self.n
        pts = [(i, j)]
        for s in self.word:
            if s.left:
                i += 1
            else:
                j -= 1
            pts.append((i, j))
        return pts

    def to_json(self) -> str:
        return json.dumps(
            {
                "word": format_word(self.word),
                "pi": list(self.pi),
                "x": [str(v) for v in self.x],
                "y": [str(v) for v in self.y],
                "u": [s.value for s in self.u],
                "v": [s.value for s in self.v],
                "box_type": {
                    f"{i},{j}": self.box_type(i, j) for i, j in self.boxes()
                },
            }
        )


def precompute_par(w: Sequence[Rel], z: Sequence) -> ShapePlan:
    """Split the word into column/row symbols with their parameters.

    x_k is the parameter of the k-th left symbol in word order; y_k the
    parameter of the k-th right symbol counted from the end of the word.
    """
    w = tuple(w)
    if len(z) != len(w):
        raise ValueError(f"got {len(z)} parameters for a word of length {len(w)}")
    u, x, v_rev, y_rev = [], [], [], []
    for s, zz in zip(w, z):
        if s.left:
            u.append(s)
            x.append(zz)
        else:
            v_rev.append(s)
            y_rev.append(zz)
    return ShapePlan(
        word=w,
        pi=encoded_shape(w),
        x=tuple(x),
        y=tuple(y_rev[::-1]),
        u=tuple(u),
        v=tuple(v_rev[::-1]),
    )


def q_volume_parameters(w: Sequence[Rel], q):
    """Parameters making the measure proportional to q^(total volume):
    z_i = q^-i on left symbols and q^i on right symbols."""
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0,1), got {q}")
    return tuple(
        q ** (-(i + 1)) if s.left else q ** (i + 1) for i, s in enumerate(w)
    )


def symmetrize(w: Sequence[Rel], z: Sequence):
    """Return (w concatenated with its reversed-and-inverted copy, z with its
    reverse).  The resulting plan has x_i = y_i for all i."""
    w = tuple(w)
    wsym = w + tuple(s.inverse for s in reversed(w))
    zsym = tuple(z) + tuple(reversed(tuple(z)))
    return wsym, zsym


def parse_params(text: str, n: int | None = None):
    """Parse a comma-separated parameter list; ``a/b`` gives exact rationals."""
    items = [t.strip() for t in text.split(",") if t.strip()]
    out = []
    for t in items:
        if "/" in t or ("." not in t and "e" not in t.lower()):
            out.append(Fraction(t))
        else:
            out.append(float(t))
    if n is not None and len(out) != n:
        raise ValueError(f"expected {n} parameters, got {len(out)}")
    return tuple(out)
