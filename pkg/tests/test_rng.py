import math

import pytest

from schursample.rng import RandomSource


def test_determinism():
    a = RandomSource(12345)
    b = RandomSource(12345)
    assert [a.geometric(0.7) for _ in range(50)] == [b.geometric(0.7) for _ in range(50)]
    assert [a.bernoulli(0.3) for _ in range(50)] == [b.bernoulli(0.3) for _ in range(50)]


def test_child_streams_differ():
    src = RandomSource(9)
    c0, c1 = src.child(0), src.child(1)
    assert [c0.geometric(0.5) for _ in range(20)] != [c1.geometric(0.5) for _ in range(20)]


def test_geometric_degenerate_and_errors():
    src = RandomSource(1)
    assert all(src.geometric(0.0) == 0 for _ in range(10))
    with pytest.raises(ValueError):
        src.geometric(1.0)
    with pytest.raises(ValueError):
        src.geometric(-0.1)


def test_geometric_moments():
    src = RandomSource(2024)
    n = 200_000
    draws = [src.geometric(0.5) for _ in range(n)]
    mean = sum(draws) / n
    # mean xi/(1-xi) = 1, var xi/(1-xi)^2 = 2
    assert abs(mean - 1.0) < 3 * math.sqrt(2.0 / n)
    p0 = sum(1 for d in draws if d == 0) / n
    assert abs(p0 - 0.5) < 3 * math.sqrt(0.25 / n)


def test_geometric_mass_at_zero_xi09():
    src = RandomSource(7)
    n = 200_000
    p0 = sum(1 for _ in range(n) if src.geometric(0.9) == 0) / n
    assert abs(p0 - 0.1) < 3 * math.sqrt(0.09 / n)


def test_bernoulli():
    src = RandomSource(3)
    assert src.bernoulli(0.0) == 0 and src.bernoulli(1.0) == 1
    n = 200_000
    mean = sum(src.bernoulli(0.25) for _ in range(n)) / n
    assert abs(mean - 0.25) < 3 * math.sqrt(0.25 * 0.75 / n)


def test_poisson_moments():
    src = RandomSource(11)
    n = 100_000
    for theta in (0.5, 4.0, 45.0):
        draws = [src.poisson(theta) for _ in range(n // (1 if theta < 40 else 10))]
        m = len(draws)
        mean = sum(draws) / m
        assert abs(mean - theta) < 4 * math.sqrt(theta / m)


def test_draw_log():
    src = RandomSource(5, log_draws=True)
    src.geometric(0.5)
    src.bernoulli(0.5)
    assert [entry[0] for entry in src.draw_log] == ["geom", "bern"]
    assert src.ledger.total == 2
