"""Independent Monte Carlo samplers validating the determinant formulas.

Every sampler draws from a fresh generator created from its
:class:`~noncolliding.rng.RngStream`, so results are deterministic per
(seed, stream) and replicated runs are byte-identical.  Comparisons
against determinant CDFs use Dvoretzky-Kiefer-Wolfowitz bands: at level
95% the band half-width is sqrt(log(2/0.05) / (2 n)).
"""

from dataclasses import dataclass

import numpy as np

from .defaults import DEFAULTS
from .exceptions import ParameterError
from .rng import RngStream

__all__ = [
    "MCEstimate", "dkw_band", "empirical_cdf", "sample_gue", "sample_arith_max",
    "sample_blpp", "sample_piflat", "sample_loe_max", "sample_dyson_max",
    "sample_bridge_topmax",
]


@dataclass
class MCEstimate:
    """A Monte Carlo estimate with its uncertainty band."""

    value: float = None
    n_samples: int = 0
    seed: int = 0
    std_error: float = None
    samples: np.ndarray = None
    dkw95: float = None

    def band(self):
        return self.dkw95 if self.dkw95 is not None else dkw_band(self.n_samples)


def dkw_band(n, level=0.05):
    """95% (by default) uniform confidence half-width for an empirical CDF."""
    return float(np.sqrt(np.log(2.0 / level) / (2.0 * n)))


def empirical_cdf(samples, grid):
    """Empirical CDF of ``samples`` evaluated on ``grid``."""
    s = np.sort(np.asarray(samples).ravel())
    return np.searchsorted(s, np.asarray(grid), side="right") / float(len(s))


def _default_stream(stream):
    return RngStream(DEFAULTS["seed"]) if stream is None else stream


def sample_gue(n, stream=None, samples=1):
    """GUE matrices H = (W + W*)/sqrt(2) with standard complex Gaussian W.

    Convention: diagonal entries are real N(0,1), off-diagonal complex with
    E|H_ij|^2 = 1.  Returns (n, n) for samples=1, else (samples, n, n).
    """
    gen = _default_stream(stream).generator()
    shape = (samples, n, n)
    W = (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / np.sqrt(2.0)
    H = (W + np.conj(np.swapaxes(W, -1, -2))) / np.sqrt(2.0)
    return H[0] if samples == 1 else H


def sample_arith_max(n, delta, lam1, stream=None, samples=1, chunk=64):
    """Largest eigenvalue of the arithmetic-spectrum matrix plus GUE noise.

    Returns (lam_max, rescaled) where rescaled = delta*(lam_max - lam1) -
    log(n-1); arrays of length ``samples`` (scalars for samples=1).
    """
    if n < 1:
        raise ParameterError("need n >= 1")
    stream = _default_stream(stream)
    diag = lam1 - delta * np.arange(n)
    out = np.empty(samples)
    gen = stream.generator()
    done = 0
    while done < samples:
        b = min(chunk, samples - done)
        shape = (b, n, n)
        W = (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / np.sqrt(2.0)
        H = (W + np.conj(np.swapaxes(W, -1, -2))) / np.sqrt(2.0)
        H += np.diag(diag)[None, :, :]
        out[done:done + b] = np.linalg.eigvalsh(H)[:, -1]
        done += b
    rescaled = delta * (out - lam1) - (np.log(n - 1) if n > 1 else 0.0)
    if samples == 1:
        return float(out[0]), float(rescaled[0])
    return out, rescaled


def sample_blpp(b, mu, m, t, grid_step=None, stream=None, paths=1):
    """Boundary-driven Brownian last passage values by grid dynamic programming.

    L(0, j) = b(t_j); row k is B_k(t_j) + running-max of (L(k-1, .) - B_k(.)).
    The grid maximum is biased low by ~sqrt(step log) for continuum maxima;
    comparison tolerances account for it.
    """
    mu = np.atleast_1d(np.asarray(mu, dtype=float))[:m] if np.ndim(mu) else np.full(m, float(mu))
    if len(mu) != m:
        raise ParameterError("need one drift per row")
    step = (t / DEFAULTS["blpp_grid"]) if grid_step is None else float(grid_step)
    J = int(round(t / step))
    gen = _default_stream(stream).generator()
    ts = np.arange(J + 1) * step
    boundary = np.asarray(b(ts))
    out = np.empty(paths)
    done = 0
    chunk = max(1, int(4e7 / max(1, J)))
    while done < paths:
        npath = min(chunk, paths - done)
        prev = np.broadcast_to(boundary, (npath, J + 1)).copy()
        for k in range(m):
            inc = gen.standard_normal((npath, J)) * np.sqrt(step) + mu[k] * step
            Bk = np.concatenate([np.zeros((npath, 1)), np.cumsum(inc, axis=1)], axis=1)
            prev = Bk + np.maximum.accumulate(prev - Bk, axis=1)
        out[done:done + npath] = prev[:, -1]
        done += npath
    return float(out[0]) if paths == 1 else out


def sample_piflat(beta, stream=None, samples=1, n=None):
    """Point-to-line passage value over the staircase triangle.

    Cell (i, j) with i+j <= n+1 carries an Exponential(beta_i + beta_{n+1-j})
    weight; the value is the best up/right path from (1,1) to the boundary.
    """
    beta = np.atleast_1d(np.asarray(beta, dtype=float))
    n = len(beta) if n is None else int(n)
    if n != len(beta):
        raise ParameterError("need one rate per row")
    if np.any(beta <= 0):
        raise ParameterError("rates must be positive")
    gen = _default_stream(stream).generator()
    G = {}
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            rate = beta[i - 1] + beta[n - j]  # beta_{n+1-j}, 1-based
            w = gen.exponential(1.0 / rate, size=samples)
            best = np.zeros(samples)
            if (i - 1, j) in G:
                best = np.maximum(best, G[(i - 1, j)])
            if (i, j - 1) in G:
                best = np.maximum(best, G[(i, j - 1)])
            G[(i, j)] = best + w
    out = np.zeros(samples)
    for i in range(1, n + 1):
        out = np.maximum(out, G[(i, n + 1 - i)])
    return float(out[0]) if samples == 1 else out


def sample_loe_max(n, stream=None, samples=1, chunk=512):
    """Largest eigenvalue of X^t X for X an (n+1) x n standard normal matrix."""
    gen = _default_stream(stream).generator()
    out = np.empty(samples)
    done = 0
    while done < samples:
        b = min(chunk, samples - done)
        X = gen.standard_normal((b, n + 1, n))
        M = np.swapaxes(X, -1, -2) @ X
        out[done:done + b] = np.linalg.eigvalsh(M)[:, -1]
        done += b
    return float(out[0]) if samples == 1 else out


def sample_dyson_max(nu, times, stream=None, samples=1, chunk=64):
    """lambda_max(H(t_i) + diag(nu)) along Hermitian Brownian motion.

    H is sampled at the sorted times through independent Gaussian
    increments; returns shape (samples, len(times)) (or (len(times),)).
    """
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    n = len(nu)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if np.any(times <= 0) or np.any(np.diff(times) <= 0):
        raise ParameterError("times must be positive and strictly increasing")
    gen = _default_stream(stream).generator()
    out = np.empty((samples, len(times)))
    done = 0
    while done < samples:
        b = min(chunk, samples - done)
        H = np.zeros((b, n, n), dtype=complex)
        t_prev = 0.0
        for k, t in enumerate(times):
            dt = t - t_prev
            shape = (b, n, n)
            W = (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / np.sqrt(2.0)
            H = H + np.sqrt(dt) * (W + np.conj(np.swapaxes(W, -1, -2))) / np.sqrt(2.0)
            out[done:done + b, k] = np.linalg.eigvalsh(H + np.diag(nu)[None, :, :])[:, -1]
            t_prev = t
        done += b
    return out[0] if samples == 1 else out


def _eig_max_2x2(h11, h22, re12, im12):
    mean = 0.5 * (h11 + h22)
    disc = np.sqrt(0.25 * (h11 - h22) ** 2 + re12 ** 2 + im12 ** 2)
    return mean + disc


def _bridge_grid(s, step):
    J = int(np.ceil(s / step))
    ts = np.arange(1, J + 1) * step
    ts[-1] = s
    return ts


def sample_bridge_topmax(n, s, nu=None, grid_step=None, stream=None, paths=1, chunk=None):
    """Running maximum over [0, s] of the top eigenvalue of a Hermitian bridge.

    Entrywise standard bridge construction: Brownian increments are pinned
    by H^br(t) = H(t) - t H(1), which is exact in law per entry and stable
    at t = 1.  The grid maximum is biased low by ~0.58 sqrt(step) per the
    usual missed-excursion estimate; tolerances account for it.  For nu
    given, (1-t) diag(nu) is added; that variant is experimental (not
    validated as the law of nu-started noncolliding bridges) and excluded
    from acceptance checks.
    """
    if not 0.0 < s <= 1.0:
        raise ParameterError("need 0 < s <= 1")
    step = (1.0 / DEFAULTS["bridge_grid"]) if grid_step is None else float(grid_step)
    ts = _bridge_grid(s, step)
    J = len(ts)
    gen = _default_stream(stream).generator()
    nu = None if nu is None else np.atleast_1d(np.asarray(nu, dtype=float))
    out = np.empty(paths)
    done = 0

    if n <= 2:
        # fully vectorized over the grid via the real coordinates of H
        scales = [1.0] if n == 1 else [1.0, 1.0, 0.5, 0.5]  # h11 | h11, h22, re12, im12
        chunk = chunk or max(1, int(1.2e7 / J))
        dts = np.diff(np.concatenate([[0.0], ts]))
        while done < paths:
            b = min(chunk, paths - done)
            comps = []
            for sc in scales:
                inc = gen.standard_normal((b, J)) * np.sqrt(dts * sc)[None, :]
                B = np.cumsum(inc, axis=1)
                tail = gen.standard_normal((b, 1)) * np.sqrt(max(1.0 - ts[-1], 0.0) * sc)
                H1 = B[:, -1:] + tail
                comps.append(B - ts[None, :] * H1)
            if n == 1:
                lam = comps[0]
                if nu is not None:
                    lam = lam + (1.0 - ts[None, :]) * nu[0]
            else:
                h11, h22, re12, im12 = comps
                if nu is not None:
                    h11 = h11 + (1.0 - ts[None, :]) * nu[0]
                    h22 = h22 + (1.0 - ts[None, :]) * nu[1]
                lam = _eig_max_2x2(h11, h22, re12, im12)
            out[done:done + b] = np.maximum(lam.max(axis=1), 0.0 if nu is None else -np.inf)
            done += b
        return float(out[0]) if paths == 1 else out

    chunk = chunk or max(1, int(2e6 / max(1, J * n * n)))
    while done < paths:
        b = min(chunk, paths - done)
        H = np.zeros((b, n, n), dtype=complex)
        best = np.full(b, 0.0 if nu is None else -np.inf)
        t_prev = 0.0
        for k, t_k in enumerate(ts):
            dt = t_k - t_prev
            shape = (b, n, n)
            W = (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / np.sqrt(2.0)
            G = np.sqrt(dt) * (W + np.conj(np.swapaxes(W, -1, -2))) / np.sqrt(2.0)
            H = H * ((1.0 - t_k) / (1.0 - t_prev)) + G * np.sqrt((1.0 - t_k) / (1.0 - t_prev))
            M = H if nu is None else H + (1.0 - t_k) * np.diag(nu)[None, :, :]
            best = np.maximum(best, np.linalg.eigvalsh(M)[:, -1])
            t_prev = t_k
        out[done:done + b] = best
        done += b
    return float(out[0]) if paths == 1 else out
