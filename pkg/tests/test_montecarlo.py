import math

import numpy as np
import pytest

from noncolliding.exceptions import ParameterError
from noncolliding.kernels import BoundaryFunction
from noncolliding.montecarlo import (dkw_band, empirical_cdf, sample_arith_max,
                                     sample_blpp, sample_bridge_topmax,
                                     sample_dyson_max, sample_gue, sample_loe_max,
                                     sample_piflat)
from noncolliding.rng import RngStream


def test_dkw_band_formula():
    assert dkw_band(10 ** 6) == pytest.approx(math.sqrt(math.log(2 / 0.05) / 2e6), abs=1e-15)


def test_every_sampler_is_deterministic():
    st = RngStream(99, 3)
    nw = BoundaryFunction.narrow_wedge()
    runs = []
    for _ in range(2):
        runs.append((
            sample_gue(3, st),
            sample_piflat([1.0, 2.0], stream=st, samples=5),
            sample_loe_max(2, stream=st, samples=5),
            sample_blpp(nw, [0.0], 1, 1.0, grid_step=1 / 256, stream=st, paths=4),
            sample_bridge_topmax(2, 0.7, stream=st, paths=4, grid_step=1 / 256),
            sample_dyson_max([0.0, 0.0], [0.5, 1.0], stream=st, samples=3),
            sample_arith_max(4, 2.0, 0.0, stream=st, samples=3)[1],
        ))
    for a, b in zip(runs[0], runs[1]):
        assert np.array_equal(np.asarray(a), np.asarray(b))


def test_gue_convention_moments():
    H = sample_gue(2, RngStream(1), samples=200000)
    assert np.max(np.abs(H - np.conj(np.swapaxes(H, -1, -2)))) == 0.0
    assert abs(np.mean(H[:, 0, 0].real ** 2) - 1.0) < 0.01   # 3 sigma ~ 0.0095
    assert abs(np.mean(np.abs(H[:, 0, 1]) ** 2) - 1.0) < 0.0075


def test_arith_max_single_dim_is_normal():
    _, resc = sample_arith_max(1, 2.0, 0.5, stream=RngStream(2), samples=100000)
    # n=1: lambda_max = lam1 + N(0,1), rescaled = 2 N(0,1)
    grid = np.linspace(-4, 4, 17)
    emp = empirical_cdf(resc, grid)
    want = np.array([0.5 * (1 + math.erf(g / 2.0 / math.sqrt(2))) for g in grid])
    assert np.max(np.abs(emp - want)) < dkw_band(100000) + 1e-3


def test_blpp_narrow_wedge_is_brownian_endpoint():
    nw = BoundaryFunction.narrow_wedge()
    x = sample_blpp(nw, [0.0], 1, 1.0, grid_step=1 / 1024, stream=RngStream(3), paths=50000)
    grid = np.linspace(-2, 2, 21)
    want = np.array([0.5 * (1 + math.erf(g / math.sqrt(2))) for g in grid])
    assert np.max(np.abs(empirical_cdf(x, grid) - want)) < dkw_band(50000) + 0.004


def test_blpp_flat_reflected_drift_limit():
    # sup_t B(t) - beta t ~ Exponential(2 beta); grid max biased by ~0.58 sqrt(h)
    flat = BoundaryFunction.flat()
    x = sample_blpp(flat, [-1.0], 1, 25.0, grid_step=25.0 / 16384,
                    stream=RngStream(4), paths=30000)
    grid = np.linspace(0.5, 3.0, 15)
    want = 1 - np.exp(-2 * grid)
    assert np.max(np.abs(empirical_cdf(x, grid) - want)) < dkw_band(30000) + 0.035


def test_blpp_monotone_in_rows():
    st = RngStream(5)
    nw = BoundaryFunction.narrow_wedge()
    a = sample_blpp(nw, [0.0, 0.0], 2, 1.0, grid_step=1 / 512, stream=st, paths=2000)
    b = sample_blpp(nw, [0.0], 1, 1.0, grid_step=1 / 512, stream=st, paths=2000)
    assert a.mean() > b.mean()  # adding a row never decreases the passage value


def test_piflat_enumeration_oracle_and_law():
    # n = 3: DP over the triangle equals brute-force over the 4 lattice paths
    beta = [0.9, 1.4, 2.2]
    st = RngStream(6)
    gen = st.generator()
    samples = 1000
    draws = {}
    for i in range(1, 4):
        for j in range(1, 5 - i):
            rate = beta[i - 1] + beta[3 - j]
            draws[(i, j)] = gen.exponential(1.0 / rate, size=samples)
    paths = [[(1, 1), (2, 1), (3, 1)], [(1, 1), (2, 1), (2, 2)],
             [(1, 1), (1, 2), (2, 2)], [(1, 1), (1, 2), (1, 3)]]
    brute = np.max([sum(draws[c] for c in path) for path in paths], axis=0)
    dp = sample_piflat(beta, stream=st, samples=samples)  # fresh draws, same law
    assert len(paths) == 4
    # exact equality requires replaying the same draws through the DP:
    G = {}
    for i in range(1, 4):
        for j in range(1, 5 - i):
            best = np.zeros(samples)
            if (i - 1, j) in G:
                best = np.maximum(best, G[(i - 1, j)])
            if (i, j - 1) in G:
                best = np.maximum(best, G[(i, j - 1)])
            G[(i, j)] = best + draws[(i, j)]
    dp_replay = np.max([G[(i, 4 - i)] for i in range(1, 4)], axis=0)
    assert np.allclose(dp_replay, brute, atol=1e-12)
    assert abs(dp.mean() - brute.mean()) < 4 * brute.std() / math.sqrt(samples)


def test_piflat_single_rate_mean():
    x = sample_piflat([2.0], stream=RngStream(7), samples=100000)
    assert abs(x.mean() - 0.25) < 3 * 0.25 / math.sqrt(100000)


def test_loe_positivity_and_chisq():
    lam = sample_loe_max(1, stream=RngStream(8), samples=50000)
    assert np.all(lam >= 0)
    grid = np.linspace(0.2, 9.0, 25)
    assert np.max(np.abs(empirical_cdf(lam, grid) - (1 - np.exp(-grid / 2)))) \
        < dkw_band(50000) + 1e-3


def test_dyson_max_increment_variance_and_drift():
    times = [0.5, 1.25]
    out = sample_dyson_max(np.zeros(1), times, stream=RngStream(9), samples=200000)
    inc = out[:, 1] - out[:, 0]
    assert abs(np.var(inc) - 0.75) < 3 * 0.75 * math.sqrt(2.0 / 200000)
    # 1x1 check of the drifted identity: H(t) + t nu ~ N(t nu, t)
    t, nu1 = 0.8, 0.7
    lam = sample_dyson_max([t * nu1], [t], stream=RngStream(10), samples=100000)[:, 0]
    assert abs(lam.mean() - t * nu1) < 3 * math.sqrt(t / 100000)
    assert abs(np.var(lam) - t) < 3 * t * math.sqrt(2.0 / 100000)


def test_bridge_topmax_reflection_law():
    m = sample_bridge_topmax(1, 1.0, stream=RngStream(11), paths=40000, grid_step=1 / 4096)
    grid = np.linspace(0.25, 2.2, 20)
    want = 1 - np.exp(-2 * grid ** 2)
    assert np.max(np.abs(empirical_cdf(m, grid) - want)) < dkw_band(40000) + 0.012


def test_bridge_topmax_grid_stability():
    q1 = np.quantile(sample_bridge_topmax(2, 1.0, stream=RngStream(12), paths=20000,
                                          grid_step=1 / 1024), 0.5)
    q2 = np.quantile(sample_bridge_topmax(2, 1.0, stream=RngStream(12), paths=20000,
                                          grid_step=1 / 2048), 0.5)
    assert abs(q1 - q2) < 0.01


def test_sampler_validation():
    with pytest.raises(ParameterError):
        sample_piflat([1.0, -1.0])
    with pytest.raises(ParameterError):
        sample_bridge_topmax(2, 1.5)
    with pytest.raises(ParameterError):
        sample_dyson_max([0.0], [1.0, 0.5])
