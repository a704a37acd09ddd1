import random

import pytest

from schursample.oracle import enumerate_support
from schursample.partitions import EMPTY
from schursample.sampler import schur_sample
from schursample.symmetric import symmetric_schur_sample
from schursample.tilings import (
    CodecError,
    Domino,
    HeightMatrix,
    apply_flip,
    aztec_region_dominoes,
    enumerate_flips,
    flip_distance_check,
    from_plane_overpartition,
    from_plane_partition,
    from_steep_tiling,
    overpartition_word,
    to_plane_overpartition,
    to_plane_partition,
    to_steep_tiling,
    word_shifts,
)
from schursample.words import parse_word, q_volume_parameters

RPP_WORD = parse_word("<<<>><<>>")
RPP_SEQ = (
    EMPTY, (1,), (3, 1), (4, 2), (2, 2), (2,), (3, 2), (4, 2), (2,), EMPTY,
)
RPP_ROWS = (
    (0, 0, 2, 2, 2),
    (0, 2, 2, 3, 4),
    (1, 2, 2),
    (1, 3, 4),
)

AZTEC2_SEQ = (EMPTY, (1, 1), (1,), (2,), EMPTY)
PYRAMID5_WORD = parse_word("<'<<'<<'>>'>>'>")
PYRAMID5_SEQ = (
    EMPTY, (1,), (1, 1), (2, 2), (2, 2, 2), (3, 3, 2),
    (3, 2), (2, 1), (2,), (1,), EMPTY,
)


def test_plane_partition_known_example():
    hm = to_plane_partition(RPP_WORD, RPP_SEQ)
    assert hm.shape == (5, 5, 3, 3)
    assert hm.rows == RPP_ROWS
    assert from_plane_partition(RPP_WORD, hm) == RPP_SEQ


def test_plane_partition_trivial_and_errors():
    w = parse_word("<<>>")
    hm = to_plane_partition(w, (EMPTY,) * 5)
    assert all(all(v == 0 for v in row) for row in hm.rows)
    with pytest.raises(CodecError):
        to_plane_partition(parse_word("<'>"), (EMPTY, (1,), EMPTY))
    bad = HeightMatrix((2,), ((2, 1),))
    with pytest.raises(CodecError):
        bad.validate()


def test_plane_partition_roundtrip_random():
    rnd = random.Random(0)
    for trial in range(300):
        m, n = rnd.randrange(1, 5), rnd.randrange(1, 5)
        w = parse_word(f"(<)^{m}(>)^{n}")
        z = q_volume_parameters(w, 0.5)
        s = schur_sample(w, z, trial)
        hm = to_plane_partition(w, s.lambdas)
        assert from_plane_partition(w, hm) == s.lambdas


def test_word_shifts():
    # vertical steps of the minimal path at < and >'
    assert word_shifts(parse_word("(<'>)^2")) == (0,) * 5
    assert word_shifts(PYRAMID5_WORD) == (0, 0, 1, 1, 2, 2, 2, 3, 3, 4, 4)


def test_aztec2_known_tiling():
    w = parse_word("(<'>)^2")
    tiling = to_steep_tiling(w, AZTEC2_SEQ)
    expected = frozenset(
        [
            Domino(0, -3, True, -1),
            Domino(0, -1, True, -1),
            Domino(1, -3, True, 1),
            Domino(2, 1, True, -1),
            Domino(3, -1, True, 1),
            Domino(3, 1, True, 1),
        ]
    )
    assert aztec_region_dominoes(tiling, 2) == expected
    assert from_steep_tiling(tiling) == AZTEC2_SEQ


def test_minimal_tiling_structure():
    # the w-minimal tiling: dominoes follow the staircase of the minimal
    # path, vertical exactly where the path steps down (shift increments)
    w = PYRAMID5_WORD
    tiling = to_steep_tiling(w, (EMPTY,) * 11, window=(-9, 9))
    shifts = word_shifts(w)
    for d in tiling.dominoes:
        assert d.vertical == (shifts[d.k + 1] - shifts[d.k] == 1)
    assert flip_distance_check(tiling) == 0
    assert from_steep_tiling(tiling) == (EMPTY,) * 11


def test_pyramid_width5_roundtrip():
    tiling = to_steep_tiling(PYRAMID5_WORD, PYRAMID5_SEQ)
    assert from_steep_tiling(tiling) == PYRAMID5_SEQ
    assert flip_distance_check(tiling) == sum(sum(l) for l in PYRAMID5_SEQ)


def test_flip_distance_aztec2():
    # |(1,1)| + |(1)| + |(2)| = 2 + 1 + 2
    tiling = to_steep_tiling(parse_word("(<'>)^2"), AZTEC2_SEQ)
    assert flip_distance_check(tiling) == 5


def test_steep_roundtrip_random():
    rnd = random.Random(5)
    for trial in range(200):
        n = rnd.randrange(1, 5)
        w = parse_word(f"(<'>)^{n}")
        s = schur_sample(w, (1,) * (2 * n), trial)
        t = to_steep_tiling(w, s.lambdas)
        assert from_steep_tiling(t) == s.lambdas
    for trial in range(100):
        s = schur_sample(PYRAMID5_WORD, q_volume_parameters(PYRAMID5_WORD, 0.6), trial)
        t = to_steep_tiling(PYRAMID5_WORD, s.lambdas)
        assert from_steep_tiling(t) == s.lambdas


def test_steep_rejects_bad_words():
    with pytest.raises(CodecError):
        to_steep_tiling(parse_word("<>"), (EMPTY, (1,), EMPTY))


def test_flips_change_volume_by_one_aztec2():
    w = parse_word("(<'>)^2")
    window = (-7, 7)
    sup = enumerate_support(w, (1,) * 4, cap=100)
    tilings = {
        to_steep_tiling(w, seq, window=window).domino_set(): sum(map(sum, seq))
        for seq in sup.entries
    }
    assert len(tilings) == 8
    for seq in sup.entries:
        t = to_steep_tiling(w, seq, window=window)
        vol = flip_distance_check(t)
        for pair in enumerate_flips(t):
            flipped = apply_flip(t, pair)
            new_vol = flip_distance_check(flipped)
            assert abs(new_vol - vol) == 1


def test_aztec_codec_counts():
    for n, count in ((1, 2), (2, 8), (3, 64)):
        w = parse_word(f"(<'>)^{n}")
        sup = enumerate_support(w, (1,) * (2 * n), cap=100)
        window = (-2 * n - 3, 2 * n + 3)
        distinct = {
            to_steep_tiling(w, seq, window=window).domino_set() for seq in sup.entries
        }
        assert len(distinct) == count == 2 ** (n * (n + 1) // 2)


OVERPARTITION_SEQ = (
    EMPTY, (1,), (2,), (2, 2), (3, 3, 1), (5, 3, 1), (5, 4, 1), (5, 4, 1, 1),
    (5, 4, 2, 1),
)


def test_overpartition_known_example():
    w = overpartition_word(4)
    tab = to_plane_overpartition(w, OVERPARTITION_SEQ)
    assert tab.shape == (5, 4, 2, 1)
    expected = (
        ((4, False), (4, True), (3, True), (2, False), (2, False)),
        ((3, False), (3, False), (3, True), (2, True)),
        ((3, True), (1, True)),
        ((1, False),),
    )
    assert tab.rows == expected
    assert from_plane_overpartition(tab, 4) == OVERPARTITION_SEQ


def test_overpartition_roundtrip_random():
    n = 3
    w = overpartition_word(n)
    z = tuple([0.3, 0.25] * n)
    for seed in range(300):
        s = symmetric_schur_sample(w, z, 0.5, "free", seed)
        seq = s.lambdas[: 2 * n + 1]
        tab = to_plane_overpartition(w, seq)
        assert from_plane_overpartition(tab, n) == seq


def test_overpartition_rejects_wrong_word():
    with pytest.raises(CodecError):
        to_plane_overpartition(parse_word("<<"), (EMPTY, (1,), (1,)))


def test_monotonicity_iff_interlacing():
    # a valid interlaced sequence gives a monotone filling; breaking the
    # interlacing at one slice breaks monotonicity
    w = RPP_WORD
    hm = to_plane_partition(w, RPP_SEQ)
    hm.validate()
    broken = list(RPP_SEQ)
    broken[4] = (1,)  # (4,2) > (1) fails the horizontal-strip condition
    with pytest.raises(CodecError):
        to_plane_partition(w, tuple(broken))
