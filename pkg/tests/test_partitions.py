import pytest
from hypothesis import given, strategies as st

from schursample.partitions import (
    EMPTY,
    conjugate,
    contains,
    from_maya,
    interlaces,
    interlaces_h,
    interlaces_v,
    make,
    part,
    partitions_of,
    partitions_up_to,
    to_maya,
    weight,
)
from schursample.words import Rel


partition_strategy = st.lists(st.integers(1, 12), max_size=8).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_make_trims_and_validates():
    assert make([3, 1, 0, 0]) == (3, 1)
    assert make([]) == ()
    with pytest.raises(ValueError):
        make([1, 2])
    with pytest.raises(ValueError):
        make([2, -1])


def test_part_accessor_is_total():
    lam = (5, 2)
    assert [part(lam, i) for i in range(1, 5)] == [5, 2, 0, 0]


def test_conjugate_examples():
    assert conjugate((2, 2, 2, 1, 1)) == (5, 3)
    assert conjugate(EMPTY) == EMPTY
    assert conjugate((5, 2)) == (2, 2, 1, 1, 1)


def test_conjugate_involution_exhaustive_weight_20():
    for lam in partitions_up_to(20):
        assert conjugate(conjugate(lam)) == lam


def test_interlacing_examples():
    assert interlaces_h((3, 1), (2, 1))
    assert interlaces_v((2, 1), (1, 1))
    assert not interlaces_v((3, 1), (1, 1))
    for rel in Rel:
        assert interlaces((2, 2), (2, 2), rel)


def test_interlacing_conjugation_duality_weight_12():
    parts = partitions_up_to(12)
    for lam in parts:
        for mu in parts:
            assert interlaces_h(lam, mu) == interlaces_v(conjugate(lam), conjugate(mu))


def test_interlacing_implies_containment():
    for lam in partitions_up_to(8):
        for mu in partitions_up_to(8):
            if interlaces_h(lam, mu):
                assert contains(lam, mu)
                assert weight(lam) >= weight(mu)


def test_maya_vacuum():
    m = to_maya(EMPTY, 0, window=(-7, 7))
    for pos, cell in zip(m.positions(), m.cells):
        assert cell == (pos < 0)


def test_maya_known_pattern():
    # (2,2,2,1,1): particles at 1.5, 0.5, -0.5, -2.5, -3.5 and vacuum below
    m = to_maya((2, 2, 2, 1, 1), 0)
    got = {p for p, c in zip(m.positions(), m.cells) if c}
    assert got == {3, 1, -1, -5, -7}
    full = to_maya((2, 2, 2, 1, 1), 0, window=(-13, 13))
    got = {p for p, c in zip(full.positions(), full.cells) if c}
    # below the deviation range the tail continues at -5.5, -6.5, ...
    assert got == {3, 1, -1, -5, -7} | {-11, -13}


def test_maya_window_too_small():
    with pytest.raises(ValueError):
        to_maya((3, 1), 0, window=(-1, 1))


@given(partition_strategy, st.integers(-3, 3))
def test_maya_round_trip(lam, shift):
    assert from_maya(to_maya(lam, shift)) == lam
    wide = to_maya(lam, shift, window=(2 * shift - 31, 2 * shift + 31))
    assert from_maya(wide) == lam


def test_partitions_of_counts():
    counts = [len(partitions_of(n)) for n in range(8)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15]
