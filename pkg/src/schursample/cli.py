"""Command-line interface: sampling, partition functions, verification,
model conversion, and SVG rendering.

All randomness flows through --seed; batch runs derive one independent
stream per run index, so output order and content are reproducible.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import jsonio
from .oracle import chi_square_statistic, enumerate_support, tv_distance
from .render import RenderStyle, render_svg
from .rng import RandomSource
from .sampler import in_place_boundary_sample, schur_sample
from .symmetric import symmetric_schur_sample
from .tilings import (
    to_plane_overpartition,
    to_plane_partition,
    to_steep_tiling,
)
from .unbounded import (
    PyramidalParameters,
    PyramidalSampler,
    WordConvention,
    plancherel_sample,
)
from .words import parse_params, parse_word, q_volume_parameters


class CliError(Exception):
    pass


def _word_and_params(args):
    word = parse_word(args.word)
    if args.z is not None:
        z = parse_params(args.z, len(word))
    elif args.q is not None:
        z = q_volume_parameters(word, Fraction(args.q) if "/" in args.q else float(args.q))
    else:
        raise CliError("need --z or --q")
    return word, z


def _batch(count: int, seed: int, one):
    if count == 1:
        return [one(RandomSource(seed))]
    base = RandomSource(seed)
    with ThreadPoolExecutor(max_workers=min(count, 8)) as pool:
        return list(pool.map(lambda k: one(base.child(k)), range(count)))


def cmd_sample(args) -> int:
    word, z = _word_and_params(args)
    if args.in_place:
        one = lambda src: in_place_boundary_sample(word, z, src)
    else:
        one = lambda src: schur_sample(word, z, src, order=args.order)
    for s in _batch(args.count, args.seed, one):
        print(jsonio.dumps(s))
    return 0


def cmd_sample_symmetric(args) -> int:
    word = parse_word(args.word)
    z = parse_params(args.z, len(word))
    t = parse_params(args.t, 1)[0]
    mode = args.mode.replace("-", "_")
    one = lambda src: symmetric_schur_sample(word, z, t, mode, src)
    for s in _batch(args.count, args.seed, one):
        print(jsonio.dumps(s))
    return 0


def cmd_sample_unbounded(args) -> int:
    params = PyramidalParameters.q_volume(float(args.q))
    conv = WordConvention.pyramid() if args.alternating else WordConvention.plane_partitions()
    sampler = PyramidalSampler(params, conv)
    out = _batch(args.count, args.seed, sampler.sample)
    for s in out:
        print(
            json.dumps(
                {
                    "format": jsonio.FORMAT,
                    "kind": "pyramidal-sample",
                    "q": args.q,
                    "convention": conv.name,
                    "seed": s.seed,
                    "truncation_index": s.truncation_index,
                    "lambdas": {str(i): list(v) for i, v in sorted(s.lambdas.items())},
                }
            )
        )
    return 0


def cmd_sample_plancherel(args) -> int:
    one = lambda src: plancherel_sample(args.theta, src)
    for lam in _batch(args.count, args.seed, one):
        print(json.dumps({"format": jsonio.FORMAT, "kind": "partition", "lambda": list(lam)}))
    return 0


def cmd_zfun(args) -> int:
    from .zfun import z_finite, z_symmetric

    word = parse_word(args.word)
    z = parse_params(args.z, len(word))
    if args.t is not None:
        t = parse_params(args.t, 1)[0]
        out = z_symmetric(word, z, t, args.mode.replace("-", "_"))
    else:
        out = z_finite(word, z)
    print(str(out))
    return 0


def cmd_verify(args) -> int:
    word, z = _word_and_params(args)
    zx = tuple(Fraction(v) if not isinstance(v, float) else Fraction(v).limit_denominator(10**9) for v in z)
    q = None
    if args.q is not None:
        q = Fraction(args.q) if "/" in args.q else Fraction(args.q).limit_denominator(10**9)
    sup = enumerate_support(word, zx, cap=args.cap, q=q, refine_tail_to=2 * args.cap + 8)
    src = RandomSource(args.seed)
    counts = {}
    for k in range(args.samples):
        s = schur_sample(word, z, src.child(k))
        counts[s.lambdas] = counts.get(s.lambdas, 0) + 1
    tv = tv_distance(counts, sup)
    total = sup.total
    probs = {key: float(w / total) for key, w in sup.entries.items()}
    stat, dof = chi_square_statistic(counts, probs, args.samples)
    passed = tv <= args.tv_threshold
    print(f"support entries: {len(sup.entries)} (cap {args.cap})")
    print(f"tail bound: {float(sup.tail_bound):.3g}")
    print(f"TV distance: {tv:.5f}")
    print(f"chi-square: {stat:.2f} on {dof} dof")
    from .oracle import chi_square_pvalue

    print(f"chi-square p-value: {chi_square_pvalue(stat, dof):.4g}")
    print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def cmd_convert(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    obj = jsonio.loads(text.strip().splitlines()[0])
    if args.to == "plane-partition":
        view = to_plane_partition(obj.word, obj.lambdas)
    elif args.to == "steep-tiling":
        view = to_steep_tiling(obj.word, obj.lambdas)
    elif args.to == "overpartition":
        view = to_plane_overpartition(obj.word, obj.lambdas)
    else:
        raise CliError(f"unknown target {args.to!r}")
    print(jsonio.dumps(view))
    return 0


def cmd_render(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    view = jsonio.loads(text.strip().splitlines()[0])
    svg = render_svg(view, RenderStyle(model=args.style, scale=args.scale))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        print(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="schursample",
        description="Exact sampling of Schur processes and their tiling models.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, word=True):
        if word:
            sp.add_argument("--word", required=True, help="e.g. \"(<'>)^4\" or \"<<>>\"")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--count", type=int, default=1)

    sp = sub.add_parser("sample", help="sample a finite Schur process")
    add_common(sp)
    sp.add_argument("--z", help="comma-separated parameters, rationals allowed")
    sp.add_argument("--q", help="q-Volume specialization parameter in (0,1)")
    sp.add_argument("--order", choices=["row_major", "diagonal"], default="row_major")
    sp.add_argument("--in-place", action="store_true", help="O(m+n) storage variant")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("sample-symmetric", help="sample a right-free Schur process")
    add_common(sp)
    sp.add_argument("--z", required=True)
    sp.add_argument("--t", default="1")
    sp.add_argument(
        "--mode", choices=["free", "even-rows", "even-columns"], default="free"
    )
    sp.set_defaults(func=cmd_sample_symmetric)

    sp = sub.add_parser("sample-unbounded", help="sample a pyramidal Schur process")
    sp.add_argument("--q", required=True)
    sp.add_argument("--alternating", action="store_true", help="pyramid-partition word")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_sample_unbounded)

    sp = sub.add_parser("sample-plancherel", help="poissonized Plancherel partition")
    sp.add_argument("--theta", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_sample_plancherel)

    sp = sub.add_parser("zfun", help="closed-form partition function")
    sp.add_argument("--word", required=True)
    sp.add_argument("--z", required=True)
    sp.add_argument("--t", default=None)
    sp.add_argument(
        "--mode", choices=["free", "even-rows", "even-columns"], default="free"
    )
    sp.set_defaults(func=cmd_zfun)

    sp = sub.add_parser("verify", help="compare samples against the exact law")
    add_common(sp)
    sp.add_argument("--z")
    sp.add_argument("--q")
    sp.add_argument("--cap", type=int, default=12)
    sp.add_argument("--samples", type=int, default=10000)
    sp.add_argument("--tv-threshold", type=float, default=0.02)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("convert", help="convert a sample JSON to a tiling view")
    sp.add_argument("--to", required=True,
                    choices=["plane-partition", "steep-tiling", "overpartition"])
    sp.add_argument("--input", default="-")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("render", help="render a view JSON to SVG")
    sp.add_argument("--style", choices=["lozenge", "domino", "maya-particles"],
                    default="domino")
    sp.add_argument("--scale", type=float, default=12.0)
    sp.add_argument("--input", default="-")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
