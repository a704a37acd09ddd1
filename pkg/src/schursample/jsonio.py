"""Versioned JSON encoding of samples and views.

Parameters are serialized as strings so exact rationals survive the
round trip; partitions are plain integer arrays, the empty partition [].
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict

from .partitions import make
from .sampler import ProcessSample
from .symmetric import SymmetricSample
from .tilings import Domino, DominoTiling, HeightMatrix, OverpartitionTableau
from .words import format_word, parse_word

FORMAT = "schursample/1"


def _num_to_str(v) -> str:
    return str(v) if isinstance(v, (int, Fraction)) else repr(float(v))


def _num_from_str(s: str):
    try:
        return Fraction(s) if ("/" in s or "." not in s and "e" not in s.lower()) else float(s)
    except ValueError:
        return float(s)


def sample_to_dict(s: ProcessSample) -> Dict[str, Any]:
    out = {
        "format": FORMAT,
        "kind": "process-sample",
        "word": format_word(s.word),
        "z": [_num_to_str(v) for v in s.z],
        "seed": s.seed,
        "rng": s.rng_algorithm,
        "lambdas": [list(l) for l in s.lambdas],
    }
    if s.draw_log is not None:
        out["draw_log"] = [[kind, param, value] for kind, param, value in s.draw_log]
    return out


def sample_from_dict(d: Dict[str, Any]) -> ProcessSample:
    if d.get("kind") not in (None, "process-sample"):
        raise ValueError(f"not a process sample: kind={d.get('kind')!r}")
    return ProcessSample(
        word=parse_word(d["word"]),
        z=tuple(_num_from_str(v) for v in d["z"]),
        seed=d.get("seed"),
        lambdas=tuple(make(l) for l in d["lambdas"]),
        rng_algorithm=d.get("rng", "unknown"),
    )


def symmetric_to_dict(s: SymmetricSample) -> Dict[str, Any]:
    return {
        "format": FORMAT,
        "kind": "symmetric-sample",
        "word": format_word(s.word),
        "z": [_num_to_str(v) for v in s.z],
        "t": _num_to_str(s.t),
        "mode": s.mode,
        "seed": s.seed,
        "rng": s.rng_algorithm,
        "lambdas": [list(l) for l in s.lambdas],
    }


def symmetric_from_dict(d: Dict[str, Any]) -> SymmetricSample:
    if d.get("kind") != "symmetric-sample":
        raise ValueError(f"not a symmetric sample: kind={d.get('kind')!r}")
    return SymmetricSample(
        word=parse_word(d["word"]),
        z=tuple(_num_from_str(v) for v in d["z"]),
        t=_num_from_str(d["t"]),
        mode=d["mode"],
        seed=d.get("seed"),
        lambdas=tuple(make(l) for l in d["lambdas"]),
        rng_algorithm=d.get("rng", "unknown"),
    )


def view_to_dict(view) -> Dict[str, Any]:
    if isinstance(view, HeightMatrix):
        return {
            "format": FORMAT,
            "kind": "plane-partition",
            "shape": list(view.shape),
            "rows": [list(r) for r in view.rows],
        }
    if isinstance(view, DominoTiling):
        return {
            "format": FORMAT,
            "kind": "steep-tiling",
            "word": format_word(view.word),
            "window": list(view.window),
            "dominoes": [
                {"k": d.k, "pos2": d.pos2, "vertical": d.vertical, "sign": d.sign}
                for d in view.dominoes
            ],
        }
    if isinstance(view, OverpartitionTableau):
        return {
            "format": FORMAT,
            "kind": "plane-overpartition",
            "shape": list(view.shape),
            "rows": [[[v, bool(o)] for v, o in row] for row in view.rows],
        }
    raise TypeError(f"cannot serialize view of type {type(view).__name__}")


def view_from_dict(d: Dict[str, Any]):
    kind = d.get("kind")
    if kind == "plane-partition":
        return HeightMatrix(tuple(d["shape"]), tuple(tuple(r) for r in d["rows"]))
    if kind == "steep-tiling":
        return DominoTiling(
            parse_word(d["word"]),
            tuple(d["window"]),
            tuple(
                sorted(
                    Domino(e["k"], e["pos2"], bool(e["vertical"]), int(e["sign"]))
                    for e in d["dominoes"]
                )
            ),
        )
    if kind == "plane-overpartition":
        return OverpartitionTableau(
            tuple(d["shape"]),
            tuple(tuple((int(v), bool(o)) for v, o in row) for row in d["rows"]),
        )
    raise ValueError(f"unknown view kind {kind!r}")


def dumps(obj) -> str:
    if isinstance(obj, ProcessSample):
        return json.dumps(sample_to_dict(obj))
    if isinstance(obj, SymmetricSample):
        return json.dumps(symmetric_to_dict(obj))
    return json.dumps(view_to_dict(obj))


def loads(text: str):
    d = json.loads(text)
    kind = d.get("kind", "process-sample")
    if kind == "process-sample":
        return sample_from_dict(d)
    if kind == "symmetric-sample":
        return symmetric_from_dict(d)
    return view_from_dict(d)
