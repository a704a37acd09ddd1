import math
from fractions import Fraction


from schursample.oracle import enumerate_symmetric_support, horizontal_strips_above
from schursample.partitions import EMPTY, conjugate, partitions_up_to
from schursample.rng import RandomSource
from schursample.symmetric import (
    SymmetricSample,
    fold_boundary_weight,
    symmetric_schur_sample,
    symmetric_weight,
)
from schursample.words import parse_word
from schursample.zfun import z_symmetric


def test_single_left_free_is_geometric():
    z, t = 0.4, 0.6
    n = 40_000
    src = RandomSource(123)
    sizes = []
    for k in range(n):
        s = symmetric_schur_sample(parse_word("<"), (z,), t, "free", src.child(k))
        assert len(s.lambdas) == 3
        assert len(s.free_partition) <= 1
        sizes.append(sum(s.free_partition))
    xi = t * z
    mean = sum(sizes) / n
    assert abs(mean - xi / (1 - xi)) < 4 * math.sqrt(xi / (1 - xi) ** 2 / n)
    p0 = sum(1 for v in sizes if v == 0) / n
    assert abs(p0 - (1 - xi)) < 4 * math.sqrt(xi * (1 - xi) / n)


def test_single_left_even_columns_is_deterministic_empty():
    for seed in range(20):
        s = symmetric_schur_sample(parse_word("<"), (0.5,), 0.9, "even_columns", seed)
        assert s.free_partition == EMPTY


def test_palindrome_and_mode_constraints():
    w = parse_word("<<'><'")
    z = (0.4, 0.3, 0.5, 0.35)
    for mode in ("free", "even_rows", "even_columns"):
        for seed in range(300):
            s = symmetric_schur_sample(w, z, 0.5, mode, seed)
            s.validate()


def test_even_rows_vv_diagonal_word():
    # leading <' makes the first diagonal box VV; even rows must still hold
    w = parse_word("<'<")
    for seed in range(200):
        s = symmetric_schur_sample(w, (0.5, 0.4), 0.6, "even_rows", seed)
        s.validate()
        assert all(v % 2 == 0 for v in s.free_partition)


def test_symmetric_weight_examples():
    w = parse_word("<")
    s = SymmetricSample(
        word=w, z=(Fraction(1, 3),), t=Fraction(1, 2), mode="free", seed=None,
        lambdas=(EMPTY, (3,), EMPTY),
    )
    assert symmetric_weight(s) == Fraction(1, 2) ** 3 * Fraction(1, 3) ** 3
    empty = SymmetricSample(
        word=(), z=(), t=Fraction(1, 2), mode="free", seed=None, lambdas=(EMPTY,)
    )
    assert symmetric_weight(empty) == 1


def test_enumerated_weights_sum_to_z_symmetric():
    t = Fraction(1, 2)
    for text, mode in [
        ("<", "free"), ("<", "even_rows"), ("<", "even_columns"),
        ("<<'", "free"), ("<'>", "even_rows"), ("<<'", "even_columns"),
        ("<><'", "free"),
    ]:
        w = parse_word(text)
        z = tuple(Fraction(1, 3 + k) for k in range(len(w)))
        sup = enumerate_symmetric_support(w, z, t, cap=24, mode=mode)
        zv = z_symmetric(w, z, t, mode).exact
        assert sup.total <= zv <= sup.total + sup.tail_bound, (text, mode)


def test_sampler_matches_enumeration_tv():
    w = parse_word("<<'")
    z = (Fraction(1, 3), Fraction(1, 4))
    t = Fraction(1, 2)
    sup = enumerate_symmetric_support(w, z, t, cap=20, mode="free")
    total = sup.total
    n = 30_000
    src = RandomSource(77)
    counts = {}
    for k in range(n):
        s = symmetric_schur_sample(w, z, t, "free", src.child(k))
        key = s.lambdas[: len(w) + 1]
        counts[key] = counts.get(key, 0) + 1
    tv = 0.0
    for key, wgt in sup.entries.items():
        tv += abs(counts.get(key, 0) / n - float(wgt / total))
    tv /= 2
    assert tv < 0.02


def test_littlewood_truncated_identity():
    mu = (2, 1)
    z, t = Fraction(3, 10), Fraction(1, 2)
    cap = 40
    lhs = sum(
        float(z) ** (sum(nu) - sum(mu)) * float(t) ** sum(nu)
        for nu in horizontal_strips_above(mu, cap - sum(mu))
    )
    kappas = [k for k in partitions_up_to(sum(mu)) if _succeq(mu, k)]
    rhs = sum(
        float(z * t * t) ** (sum(mu) - sum(k)) * float(t) ** sum(k) for k in kappas
    ) / (1 - float(z * t))
    assert abs(lhs - rhs) < 1e-9


def test_littlewood_even_rows_truncated():
    mu = (2, 1)
    z, t = 0.3, 0.5
    cap = 60
    lhs = sum(
        z ** (sum(nu) - sum(mu)) * t ** sum(nu)
        for nu in horizontal_strips_above(mu, cap - sum(mu))
        if all(v % 2 == 0 for v in nu)
    )
    kappas = [
        k
        for k in partitions_up_to(sum(mu))
        if _succeq(mu, k) and all(v % 2 == 0 for v in k)
    ]
    rhs = sum((z * t * t) ** (sum(mu) - sum(k)) * t ** sum(k) for k in kappas) / (
        1 - (z * t) ** 2
    )
    assert abs(lhs - rhs) < 1e-9


def test_littlewood_even_columns_truncated():
    mu = (2, 1)
    z, t = 0.3, 0.5
    cap = 60
    lhs = sum(
        z ** (sum(nu) - sum(mu)) * t ** sum(nu)
        for nu in horizontal_strips_above(mu, cap - sum(mu))
        if all(v % 2 == 0 for v in conjugate(nu))
    )
    kappas = [
        k
        for k in partitions_up_to(sum(mu))
        if _succeq(mu, k) and all(v % 2 == 0 for v in conjugate(k))
    ]
    rhs = sum((z * t * t) ** (sum(mu) - sum(k)) * t ** sum(k) for k in kappas)
    assert abs(lhs - rhs) < 1e-9


def _succeq(lam, mu):
    from schursample.partitions import interlaces_h

    return interlaces_h(lam, mu)


def test_fold_boundary_weight():
    w = parse_word("<>")
    assert fold_boundary_weight(w, (Fraction(1, 2), Fraction(1, 3)), Fraction(2)) == (
        Fraction(1),
        Fraction(1, 6),
    )


def test_t_handled_by_reparametrization():
    # sampling with (z; t) must match sampling with (t^eps z; 1) seed by seed
    w = parse_word("<<'")
    z = (Fraction(2, 5), Fraction(1, 4))
    t = Fraction(1, 2)
    zbar = fold_boundary_weight(w, z, t)
    for seed in range(100):
        a = symmetric_schur_sample(w, z, t, "free", seed)
        b = symmetric_schur_sample(w, zbar, 1, "free", seed)
        assert a.lambdas == b.lambdas


def test_symmetric_sampler_under_rule_checks():
    # exercise the per-box interlacing and diagonal weight-balance assertions
    from schursample import rules

    prev = rules.set_checks(True)
    try:
        w = parse_word("<'<><'")
        for mode in ("free", "even_rows", "even_columns"):
            for seed in range(100):
                symmetric_schur_sample(w, (0.4, 0.3, 0.5, 0.2), 0.5, mode, seed)
    finally:
        rules.set_checks(prev)
