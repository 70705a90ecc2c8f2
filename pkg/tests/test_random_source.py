import numpy as np
import pytest

from app.lib.random_source import MASK64, Xoshiro256StarStar, random_signal


def test_same_seed_same_stream():
    a, b = Xoshiro256StarStar(123), Xoshiro256StarStar(123)
    assert [a.next_u64() for _ in range(20)] == [b.next_u64() for _ in range(20)]


def test_different_seeds_differ():
    a, b = Xoshiro256StarStar(1), Xoshiro256StarStar(2)
    assert [a.next_u64() for _ in range(4)] != [b.next_u64() for _ in range(4)]


def test_outputs_are_64_bit():
    gen = Xoshiro256StarStar(0)
    values = [gen.next_u64() for _ in range(1000)]
    assert all(0 <= v <= MASK64 for v in values)
    assert max(values) > 1 << 60


def test_doubles_lie_in_unit_interval():
    gen = Xoshiro256StarStar(99)
    values = [gen.next_double() for _ in range(2000)]
    assert min(values) >= 0.0 and max(values) < 1.0
    assert 0.4 < float(np.mean(values)) < 0.6


def test_uniform_range():
    x = Xoshiro256StarStar(5).uniform(500, -2.0, 3.0)
    assert x.shape == (500,) and x.dtype == np.float64
    assert x.min() >= -2.0 and x.max() < 3.0


def test_random_signal_is_cached_and_read_only():
    x = random_signal(64, 42)
    assert random_signal(64, 42) is x
    assert x.min() >= -1.0 and x.max() < 1.0
    with pytest.raises(ValueError):
        x[0] = 0.0


def test_random_signal_prefix_is_stable():
    short = random_signal(16, 7)
    long = random_signal(32, 7)
    np.testing.assert_array_equal(long[:16], short)
