import math
import random
from collections import Counter


from schursample.oracle import hook_length_f
from schursample.partitions import EMPTY
from schursample.rng import RandomSource
from schursample.sampler import boundary_lambdas, run_growth
from schursample.unbounded import (
    ParamSeq,
    PyramidalParameters,
    PyramidalSampler,
    WordConvention,
    cantor_pair,
    cantor_unpair,
    grow_pyramidal,
    mixed_plancherel_sample,
    plancherel_sample,
    truncation_params,
    truncation_word,
    unbounded_schur_sample,
)
from schursample.words import precompute_par


def test_cantor_pairing():
    assert [cantor_pair(*ij) for ij in [(0, 0), (1, 0), (0, 1), (2, 0)]] == [0, 1, 2, 3]
    assert cantor_pair(0, 2) == 5
    for k in range(10_000):
        assert cantor_pair(*cantor_unpair(k)) == k
    for i in range(101):
        for j in range(101):
            assert cantor_unpair(cantor_pair(i, j)) == (i, j)


def test_truncation_index_all_zero():
    params = PyramidalParameters(ParamSeq.finite([]), ParamSeq.finite([]))
    sampler = PyramidalSampler(params, WordConvention.plane_partitions())
    src = RandomSource(5)
    assert all(sampler.sample_truncation_index(src) is None for _ in range(100))


def test_truncation_index_single_box():
    p = 0.35
    # a_0 b_0 = 0.35 with a geometric box: c = 0.35
    params = PyramidalParameters(ParamSeq.finite([0.5]), ParamSeq.finite([0.7]))
    sampler = PyramidalSampler(params, WordConvention.plane_partitions())
    src = RandomSource(31)
    n = 50_000
    hits = sum(1 for _ in range(n) if sampler.sample_truncation_index(src) == 0)
    assert abs(hits / n - p) < 4 * math.sqrt(p * (1 - p) / n)


def certified_empty_probability(q: float) -> float:
    # prod_{i,j >= 0} (1 - q^(i+j+1)) = prod_n (1 - q^n)^n to double precision
    return math.exp(sum(n * math.log1p(-(q**n)) for n in range(1, 400)))


def test_empty_probability_q03():
    q = 0.3
    params = PyramidalParameters.q_volume(q)
    sampler = PyramidalSampler(params, WordConvention.plane_partitions())
    n = 30_000
    src = RandomSource(2718)
    empties = 0
    for k in range(n):
        s = sampler.sample(src.child(k))
        if s.truncation_index is None:
            assert s.lambdas == {}
            empties += 1
        else:
            assert s.lam(0) != EMPTY  # the conditioned box forces content
    p = certified_empty_probability(q)
    assert abs(empties / n - p) < 3 * math.sqrt(p * (1 - p) / n)


def test_outputs_interlace():
    params = PyramidalParameters.q_volume(0.5)
    for conv in (WordConvention.plane_partitions(), WordConvention.pyramid()):
        src = RandomSource(99)
        for k in range(500):
            s = unbounded_schur_sample(params, conv, src.child(k))
            s.validate()


def test_coupling_with_finite_sampler():
    rnd = random.Random(12)
    params = PyramidalParameters.q_volume(0.5)
    for conv in (WordConvention.plane_partitions(), WordConvention.pyramid()):
        word = truncation_word(conv, 4)
        z = truncation_params(params, 4)
        plan = precompute_par(word, z)
        assert plan.pi == (4, 4, 4, 4)
        for _ in range(500):
            inputs = {}
            for i in range(4):
                for j in range(4):
                    kind = conv.box_kind(i, j)
                    inputs[(i, j)] = (
                        rnd.randrange(2) if kind in ("HV", "VH") else rnd.randrange(4)
                    )
            lam_inf = grow_pyramidal(conv, inputs, 4)
            fin_inputs = {(u, v): inputs[(4 - u, 4 - v)] for u, v in plan.boxes()}
            grid = run_growth(plan, fin_inputs)
            lam_fin = boundary_lambdas(plan, grid)
            for k in range(9):
                assert lam_fin[k] == lam_inf.get(k - 4, EMPTY)


def test_plancherel_empty_and_single():
    theta = 1.0
    n = 50_000
    src = RandomSource(4)
    counts = Counter(plancherel_sample(theta, src.child(k)) for k in range(n))
    p_empty = math.exp(-theta)
    p_one = math.exp(-theta) * theta
    assert abs(counts[EMPTY] / n - p_empty) < 4 * math.sqrt(p_empty / n)
    assert abs(counts[(1,)] / n - p_one) < 4 * math.sqrt(p_one / n)


def test_plancherel_mean_size_theta4():
    theta = 4.0
    n = 30_000
    src = RandomSource(8)
    total = sum(sum(plancherel_sample(theta, src.child(k))) for k in range(n))
    mean = total / n
    assert abs(mean - theta) < 3 * math.sqrt(theta / n)


def test_plancherel_exact_masses_weight2():
    # P(lam) = e^-t t^n (f/n!)^2: at n=2 both shapes carry t^2 e^-t / 4
    theta, n = 1.0, 80_000
    src = RandomSource(15)
    counts = Counter(plancherel_sample(theta, src.child(k)) for k in range(n))
    for lam in ((2,), (1, 1)):
        p = math.exp(-theta) * theta**2 * (hook_length_f(lam) / 2) ** 2
        assert abs(counts[lam] / n - p) < 4 * math.sqrt(p / n)


def test_mixed_plancherel():
    src = RandomSource(5)
    assert mixed_plancherel_sample(1.0, [0.0, 0.0], src) == EMPTY
    n = 30_000
    a, c = 0.8, 1.5
    sizes = []
    for k in range(n):
        lam = mixed_plancherel_sample(a, [c], RandomSource(1000 + k))
        assert len(lam) <= 1
        sizes.append(sum(lam))
    mean = sum(sizes) / n
    assert abs(mean - a * c) < 4 * math.sqrt(a * c / n)
    p0 = sum(1 for v in sizes if v == 0) / n
    assert abs(p0 - math.exp(-a * c)) < 4 * math.sqrt(p0 * (1 - p0) / n)


def test_mixed_plancherel_empty_probability_two_lines():
    a, bs = 1.0, [0.5, 0.3]
    n = 20_000
    src = RandomSource(64)
    empties = sum(1 for k in range(n) if mixed_plancherel_sample(a, bs, src.child(k)) == EMPTY)
    p = math.exp(-a * sum(bs))
    assert abs(empties / n - p) < 4 * math.sqrt(p * (1 - p) / n)
