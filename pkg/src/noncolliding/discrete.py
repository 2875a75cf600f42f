"""Inhomogeneous geometric last passage percolation and its Brownian limit.

Columns i carry Geometric(a_i) weights; the vector of passage times to a
row is an inhomogeneous Markov chain whose transition probability is an
N x N determinant of contour coefficients W_k.  The discrete kernels
Q^n, S_{m,-n}, S-bar_{m,n} converge, under the diffusive rescaling
provided by :func:`scaling_bridge`, to the continuum heat kernel and the
building-block kernels of the Brownian model; the demos exercise exactly
that convergence.

Contours are deformed onto saddle-centered circles (the displayed radius
constraints fix only the pole topology); on the displayed origin-centered
circles of radius in (max a_i, 1) the integrand's maximum modulus exceeds
the integral by e^{O(n)} and float evaluation is impossible at large n.
"""

from dataclasses import dataclass

import numpy as np

from .defaults import DEFAULTS
from .exceptions import ParameterError
from .rng import RngStream

_TWO_PI_I = 2j * np.pi


@dataclass(frozen=True)
class GeomParams:
    """Column parameters a_i in (0,1), walk parameter theta, row count N."""

    a: tuple
    theta: float = 0.5
    N: int = 0

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        if a.size and (np.any(a <= 0) or np.any(a >= 1)):
            raise ParameterError("column parameters must lie in (0, 1)")
        if not 0.0 < self.theta < 1.0:
            raise ParameterError("theta must lie in (0, 1)")

    @property
    def alpha(self):
        return (1.0 - self.theta) / self.theta

    def arr(self):
        return np.asarray(self.a, dtype=float)


def drift_params(mu, N, theta=0.5):
    """Column parameters a_i = 1/2 + mu_i/(2 sqrt(2 N)) of the scaling bridge."""
    mu = np.atleast_1d(np.asarray(mu, dtype=float))
    c3 = 1.0 / (2.0 * np.sqrt(2.0))
    return GeomParams(tuple(0.5 + c3 * mu / np.sqrt(N)), theta, int(N))


def scaling_bridge(N, t, x):
    """Lattice coordinates of the diffusive scaling: n = floor(Nt),
    z = floor(-2Nt - x sqrt(2N))."""
    if N < 10:
        raise ParameterError("need N >= 10")
    return int(np.floor(N * t)), int(np.floor(-2.0 * N * t - x * np.sqrt(2.0 * N)))


def _log_phi(z, a):
    """log prod_i (1 - a_i) / (1 - a_i/z)."""
    a = np.asarray(a, dtype=float)
    return (np.sum(np.log1p(-a)) - np.sum(np.log(1.0 - a[None, :] / z[..., None]), axis=-1))


def _w_many(k, xs, params, radius=1.25, nodes=None):
    """W_k at many integer arguments by circle coefficient extraction."""
    nodes = DEFAULTS["coefficient_nodes"] if nodes is None else int(nodes)
    if radius <= 1.0:
        raise ParameterError("the coefficient circle must have radius > 1")
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    z = radius * np.exp(1j * theta)
    base = k * np.log(z - 1.0) + _log_phi(z, params.arr()) if params.arr().size else k * np.log(z - 1.0)
    xs = np.atleast_1d(np.asarray(xs))
    expo = (xs[:, None] - 1.0) * np.log(z)[None, :] + base[None, :]
    m = expo.real.max(axis=1)
    vals = np.exp(expo - m[:, None]) @ ((2j * np.pi / nodes) * z)
    return np.real(vals * np.exp(m) / _TWO_PI_I)


def w_coeff(k, x, params, radius=1.25, nodes=None):
    """Transition coefficient W_k(x): the z^{-x} Laurent coefficient of
    (z-1)^k prod_i (1-a_i)/(1-a_i/z) on a circle of radius > 1."""
    return float(_w_many(int(k), [int(x)], params, radius, nodes)[0])


def w_tilde(k, x, params, radius=1.25, nodes=None):
    """Reflected coefficient W~_k(x) = W_{-k}(k - x)."""
    return w_coeff(-int(k), int(k) - int(x), params, radius, nodes)


def _check_weyl(x):
    x = np.atleast_1d(np.asarray(x, dtype=int))
    if np.any(np.diff(x) < 0):
        raise ParameterError("points must be nondecreasing (Weyl cone)")
    return x


def to_tilde(x):
    """Bijection x -> x~ with x~_j = -x_j - j (1-based j); strictly decreasing."""
    x = np.atleast_1d(np.asarray(x, dtype=int))
    return -x - np.arange(1, len(x) + 1)


def from_tilde(xt):
    xt = np.atleast_1d(np.asarray(xt, dtype=int))
    return -xt - np.arange(1, len(xt) + 1)


def transition_prob(x, y, m, params, nodes=None):
    """P(G(m) = y | G(0) = x) = det[W_{j-i}(y_j - x_i)] over N x N indices."""
    x = _check_weyl(x)
    y = _check_weyl(y)
    N = len(x)
    if len(y) != N:
        raise ParameterError("x and y must have the same length")
    cache = {}
    M = np.empty((N, N))
    for i in range(N):
        for j in range(N):
            key = (j - i, int(y[j] - x[i]))
            if key not in cache:
                cache[key] = w_coeff(key[0], key[1], params, nodes=nodes)
            M[i, j] = cache[key]
    det = float(np.linalg.det(M))
    if -1e-12 < det < 0.0:
        det = 0.0
    return det


def sample_geom_lpp(params, x_init, m, stream=None, samples=1):
    """Passage-time rows G(m, 1..N) grown by the corner recursion.

    G(i, n) = max(G(i-1, n), G(i, n-1)) + w_{i,n} with G(0, n) = x_n and
    G(i, 0) = 0.  Returns an (samples, N) integer array (or (N,)).
    """
    x_init = _check_weyl(x_init)
    if np.any(x_init < 0):
        raise ParameterError("initial data must be nonnegative")
    a = params.arr()
    if len(a) < m:
        raise ParameterError("need a column parameter for each of the m columns")
    gen = (stream or RngStream(DEFAULTS["seed"])).generator()
    N = len(x_init)
    G = np.broadcast_to(x_init, (samples, N)).astype(np.int64).copy()
    for i in range(m):
        # geometric on {0,1,...} with success 1-a_i
        w = gen.geometric(1.0 - a[i], size=(samples, N)) - 1
        row = np.zeros(samples, dtype=np.int64)
        for ncol in range(N):
            row = np.maximum(row, G[:, ncol]) + w[:, ncol]
            G[:, ncol] = row
    return G[0] if samples == 1 else G


def _saddle_circle_nodes(count):
    return int(min(16384, max(512, 16 * np.sqrt(count) + 256)))


def q_geom(n, z1, z2, params, nodes=None):
    """n-step transition probability of the strictly-left geometric walk.

    Contour form: (1/2 pi i) oint theta^{z1-z2} (alpha/(1-w))^n
    w^{-(z1-z2) + n - 1} dw over a circle inside |w| < 1.  (The displayed
    w-power with z1 and z2 interchanged fails the row-sum normalization;
    this orientation matches the negative-binomial law and the heat-kernel
    limit.)
    """
    theta, alpha = params.theta, params.alpha
    j = int(z1 - z2)
    if j < n:  # at least one unit left per step
        return 0.0
    # saddle of |w^{-(j-n)-1} (1-w)^{-n}| on the radial axis
    r = min(0.95, max(0.05, (j - n) / j if j > 0 else 0.5))
    count = DEFAULTS["coefficient_nodes"] if nodes is None else int(nodes)
    count = max(count, _saddle_circle_nodes(j + n))
    th = 2.0 * np.pi * np.arange(count) / count
    w = r * np.exp(1j * th)
    expo = (j * np.log(theta) + n * np.log(alpha) - n * np.log(1.0 - w)
            + (n - 1 - j) * np.log(w))
    m = expo.real.max()
    val = np.sum(np.exp(expo - m) * (2j * np.pi / count) * w) * np.exp(m) / _TWO_PI_I
    return float(val.real)


def s_geom(m, n, z1, z2, params, nodes=None):
    """Discrete pole-side kernel S_{m,-n}(z1, z2) on a saddle-centered circle."""
    theta, alpha = params.theta, params.alpha
    a = params.arr()[:m]
    P = -(int(z1 - z2)) - n - 1
    if P < 0:
        raise ParameterError("argument regime with a pole at w = 0 is not supported; "
                             "expected z1 - z2 <= -(n + 1)")
    wstar = P / (P + n) if P + n > 0 else 0.5
    center = wstar
    radius = max(1.3 * np.max(np.abs(a - center)) + 1e-9, 1.0 / (2.0 * np.sqrt(P + n + 1)))
    if center + radius >= 1.0:
        radius = 0.5 * (1.0 - center)
    count = _saddle_circle_nodes(P + n) if nodes is None else int(nodes)
    th = 2.0 * np.pi * np.arange(count) / count
    w = center + radius * np.exp(1j * th)
    expo = ((z1 - z2) * np.log(theta) + P * np.log(w)
            + n * (np.log(1.0 - w) - np.log(alpha)) + _log_phi(w, a))
    mx = expo.real.max()
    val = np.sum(np.exp(expo - mx) * (2j * np.pi / count) * radius * np.exp(1j * th))
    return float((val * np.exp(mx) / _TWO_PI_I).real)


def _sbar_geom_batch(m, ns, z1s, z2, params, nodes=None):
    """sbar for vectors of horizons/positions sharing one circle |w| = w*."""
    theta, alpha = params.theta, params.alpha
    a = params.arr()[:m]
    ns = np.atleast_1d(np.asarray(ns, dtype=float))
    z1s = np.atleast_1d(np.asarray(z1s, dtype=float))
    Q = (z2 - z1s) + ns - 1.0
    nbar = float(np.mean(ns))
    Qbar = float(np.mean(Q))
    wstar = nbar / (nbar - Qbar) if nbar - Qbar > 0 else 0.5
    wstar = min(0.9, max(0.1, wstar))
    count = _saddle_circle_nodes(abs(Qbar) + nbar) if nodes is None else int(nodes)
    th = 2.0 * np.pi * np.arange(count) / count
    w = wstar * np.exp(1j * th)
    base = -_log_phi(1.0 - w, a) if len(a) else np.zeros_like(w)
    expo = ((z1s - z2)[:, None] * np.log(theta)
            + Q[:, None] * np.log(1.0 - w)[None, :]
            - ns[:, None] * (np.log(w) - np.log(alpha))[None, :]
            + base[None, :])
    mx = expo.real.max(axis=1)
    vals = np.exp(expo - mx[:, None]) @ ((2j * np.pi / count) * w)
    return np.real(vals * np.exp(mx) / _TWO_PI_I)


def sbar_geom(m, n, z1, z2, params, nodes=None):
    """Discrete line-side kernel S-bar_{m,n}(z1, z2) on the circle |w| = w*."""
    return float(_sbar_geom_batch(m, [n], [z1], z2, params, nodes)[0])


def s_epi_mc(m, n, z1, z2, x_tilde, params, paths=2000, stream=None):
    """Monte Carlo epigraph kernel of the strictly-left geometric walk.

    Walks start at z1; tau is the first k with B_k > x_tilde[k]; surviving
    paths contribute sbar(m, n - tau, B_tau, z2).  ``x_tilde`` is indexed
    so that entry k bounds the walk at step k (k = 0 checks the start).
    Returns an :class:`~noncolliding.montecarlo.MCEstimate`.
    """
    from .montecarlo import MCEstimate

    if paths < 1:
        raise ParameterError("need paths >= 1")
    stream = stream or RngStream(DEFAULTS["seed"])
    x_tilde = np.asarray(x_tilde, dtype=float)
    if len(x_tilde) < n + 1:
        raise ParameterError("x_tilde must cover steps 0..n")
    if z1 > x_tilde[0]:
        val = sbar_geom(m, n, z1, z2, params)
        return MCEstimate(value=val, std_error=0.0, n_samples=paths, seed=stream.seed)
    gen = stream.generator()
    B = np.full(paths, float(z1))
    tau = np.full(paths, -1, dtype=int)
    pos = np.zeros(paths)
    for k in range(1, n):
        B -= gen.geometric(1.0 - params.theta, size=paths)
        newly = (tau < 0) & (B > x_tilde[k])
        tau[newly] = k
        pos[newly] = B[newly]
        if np.all(tau >= 0):
            break
    hit = tau >= 0
    contrib = np.zeros(paths)
    if np.any(hit):
        contrib[hit] = _sbar_geom_batch(m, n - tau[hit], pos[hit], z2, params)
    est = float(contrib.mean())
    err = float(contrib.std(ddof=1) / np.sqrt(paths)) if paths > 1 else 0.0
    return MCEstimate(value=est, std_error=err, n_samples=paths, seed=stream.seed)
