import numpy as np
import pytest

from noncolliding.exceptions import ParameterError
from noncolliding.rng import RngStream, rng_gaussian


def test_replay_is_identical():
    a = rng_gaussian(RngStream(12345, 7), 1000)
    b = rng_gaussian(RngStream(12345, 7), 1000)
    assert np.array_equal(a, b)


def test_streams_differ():
    a = rng_gaussian(RngStream(12345, 0), 1000)
    b = rng_gaussian(RngStream(12345, 1), 1000)
    c = rng_gaussian(RngStream(54321, 0), 1000)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert abs(np.corrcoef(a, b)[0, 1]) < 0.12


def test_moments_within_clt_bands():
    x = rng_gaussian(RngStream(2026), 10 ** 6)
    assert abs(x.mean()) < 0.004         # 3 sigma band ~ 0.003
    assert abs(x.var(ddof=1) - 1.0) < 0.005


def test_substream_disjoint():
    s = RngStream(9)
    assert s.substream(0) != s.substream(1)
    assert s.substream(3).seed == 9


def test_count_validation():
    with pytest.raises(ParameterError):
        rng_gaussian(RngStream(1), 0)
