"""Pointwise evaluators for the continuum correlation kernels.

Every kernel is a (single or double) contour integral.  Evaluation is
separable: the x-dependent factor lives on the pole-side contour, the
y-dependent factor on the line-side contour, and the coupling 1/(z -+ w)
is a fixed node-by-node matrix, so filling an (x, y) grid reduces to two
matrix products.  Exponents are stabilized by per-row max subtraction so
kernels with exponential growth or decay evaluate without overflow.

Heat-operator conventions (two distinct semigroups appear and differ by a
factor of 2 in the variance; both are housed here explicitly):

- ``heat_op_half(t, x, y)`` is e^{t d^2/2}(x, y), a Gaussian of variance t
  (used by the Brownian and Hermitian extended kernels);
- ``heat_op_full(t, x, y)`` is e^{t d^2}(x, y), a Gaussian of variance 2t
  (used by the extended Airy kernel blocks).
"""

import numpy as np
from dataclasses import dataclass

from .contours import adaptive_ray, gauss_legendre, make_contour
from .defaults import DEFAULTS
from .exceptions import DomainError, ParameterError
from .special import _airy_any_real, complex_gamma, heat_kernel

_TWO_PI_I = 2j * np.pi
_DROP = DEFAULTS["decay_drop"]


def heat_op_half(t, x, y):
    """Kernel of e^{t d^2/2}: Gaussian with variance t."""
    return heat_kernel(t, x, y)


def heat_op_full(t, x, y):
    """Kernel of e^{t d^2}: Gaussian with variance 2t (no 1/2)."""
    return heat_kernel(2.0 * t, x, y)


# ---------------------------------------------------------------------------
# boundary functions and drift vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryFunction:
    """Boundary data b(t) for last passage percolation."""

    kind: str
    slope: float = 0.0
    grid: tuple = ()
    values: tuple = ()

    @staticmethod
    def narrow_wedge():
        return BoundaryFunction("narrow_wedge")

    @staticmethod
    def flat():
        return BoundaryFunction("flat")

    @staticmethod
    def linear(slope):
        return BoundaryFunction("linear", slope=float(slope))

    @staticmethod
    def sampled(ts, values):
        ts = tuple(float(t) for t in ts)
        values = tuple(float(v) for v in values)
        if len(ts) != len(values) or len(ts) < 2:
            raise ParameterError("sampled boundary needs matching grids of length >= 2")
        if any(b <= a for a, b in zip(ts[:-1], ts[1:])):
            raise ParameterError("sampled boundary grid must be strictly increasing")
        if abs(values[0]) > 1e-12 or abs(ts[0]) > 1e-12:
            raise ParameterError("boundary must start at b(0) = 0")
        return BoundaryFunction("sampled", grid=ts, values=values)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "flat":
            out = np.zeros_like(t)
        elif self.kind == "linear":
            out = -self.slope * t
        elif self.kind == "sampled":
            out = np.interp(t, self.grid, self.values)
        elif self.kind == "narrow_wedge":
            out = np.where(t == 0.0, 0.0, -np.inf)
        else:
            raise ParameterError("unknown boundary kind %r" % (self.kind,))
        return out if out.ndim else float(out)


@dataclass(frozen=True)
class DriftVector:
    """Drifts mu_i (or decay rates beta_i = -mu_i) of the driving motions."""

    values: tuple
    kind: str = "drift"  # or "rate"

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.size == 0 or not np.all(np.isfinite(vals)):
            raise ParameterError("drift vector must be nonempty and finite")
        if self.kind == "rate" and not np.all(vals > 0):
            raise ParameterError("rates must be positive")
        if self.kind not in ("drift", "rate"):
            raise ParameterError("kind must be 'drift' or 'rate'")

    def as_drifts(self):
        mu = np.asarray(self.values, dtype=float)
        return -mu if self.kind == "rate" else mu

    def as_rates(self):
        beta = -self.as_drifts()
        if not np.all(beta > 0):
            raise ParameterError("drifts must all be negative to read them as rates")
        return beta


def _drifts(mu):
    if isinstance(mu, DriftVector):
        return mu.as_drifts()
    arr = np.atleast_1d(np.asarray(mu, dtype=float))
    if arr.size == 0 or not np.all(np.isfinite(arr)):
        raise ParameterError("drift vector must be nonempty and finite")
    return arr


# ---------------------------------------------------------------------------
# generic separable contour machinery
# ---------------------------------------------------------------------------

def _log_poly(z, roots):
    """sum_i log(z - root_i); branch-insensitive once exponentiated."""
    return np.sum(np.log(z[..., None] - np.asarray(roots)[None, :]), axis=-1)


def _pair_eval(xs, ys, cw, cz, psi_w, psi_z, couplings, indicator=None):
    """Stabilized double-contour sum.

    K(x, y) = 1/(2 pi i)^2 * sum_{j,k} W_j V_k e^{psi_z(y,z_k) - psi_w(x,w_j)} C(w_j, z_k)
    with C the sum of sign/(z -+ w) couplings.  Returns a complex (Nx, Ny) array.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    PW = psi_w(xs[:, None], cw.nodes[None, :])
    PZ = psi_z(ys[:, None], cz.nodes[None, :])
    mw = PW.real.min(axis=1)
    mz = PZ.real.max(axis=1)
    A = np.exp(mw[:, None] - PW) * cw.weights[None, :]
    B = np.exp(PZ - mz[:, None]) * cz.weights[None, :]
    acc = 0.0
    for sign, op in couplings:
        if op == "-":
            M = 1.0 / (cz.nodes[None, :] - cw.nodes[:, None])
        else:
            M = 1.0 / (cz.nodes[None, :] + cw.nodes[:, None])
        acc = acc + sign * ((A @ M) @ B.T)
    out = acc * np.exp(mz[None, :] - mw[:, None]) / _TWO_PI_I ** 2
    if indicator is not None:
        out = out * indicator(ys)[None, :]
    return out


def _sum_circle(svals, circle, extra_log):
    """(1/2 pi i) * closed integral of e^{-s w + extra(w)} over the circle, per s."""
    svals = np.atleast_1d(np.asarray(svals, dtype=float))
    expo = -svals[:, None] * circle.nodes[None, :] + extra_log[None, :]
    m = expo.real.max(axis=1)
    vals = np.exp(expo - m[:, None]) @ circle.weights
    return vals * np.exp(m) / _TWO_PI_I


def _pole_circle(points, reach, min_clear=0.12, max_clear=1.0):
    """Circle hulling ``points`` with clearance shrinking as arguments grow.

    ``reach`` is the largest |argument| multiplying w in the exponent; the
    clearance trades pole resolution against the e^{reach*clearance}
    cancellation budget.
    """
    points = np.asarray(points, dtype=float)
    center = 0.5 * (points.min() + points.max())
    spread = 0.5 * (points.max() - points.min())
    clear = max(min_clear, min(max_clear, 4.0 / (1.0 + reach)))
    return center, spread + clear


def _circle_nodes(reach, radius):
    n = int(min(8192, max(256, 64 + 3.0 * reach * radius)))
    return n


def _vertical_auto(offset, quad_coeff, m, slope_bound, drop=_DROP):
    """Vertical contour sized for exponent (q/2) z^2 with phase slope bound."""
    from .contours import Contour, composite_legendre
    T = np.sqrt(2.0 * (drop + 8.0 + 2.0 * m) / quad_coeff)
    n = int(min(16384, max(192, 64 + 1.4 * slope_bound * T)))
    panels = max(1, int(np.ceil(n / 32)))
    t, wt = composite_legendre(np.linspace(-T, T, panels + 1), 32)
    return Contour("vertical", offset + 1j * t, 1j * wt, False, T,
                   {"offset": offset, "half_height": T, "nodes": len(t)})


def _band_means(vals, width):
    """Split sorted values into bands of the given width; return centers+masks."""
    vals = np.atleast_1d(np.asarray(vals, dtype=float))
    lo, hi = vals.min(), vals.max()
    edges = np.arange(lo, hi + width, width)
    if len(edges) < 2:
        edges = np.array([lo, hi + 1e-9])
    out = []
    for a, b in zip(edges[:-1], edges[1:]):
        mask = (vals >= a) & (vals < b) if b < edges[-1] else (vals >= a) & (vals <= hi)
        if np.any(mask):
            out.append((0.5 * (a + b), mask))
    return out


# ---------------------------------------------------------------------------
# product kernels on a single closed contour
# ---------------------------------------------------------------------------

def _piflat_eval(beta, svals):
    beta = np.asarray(beta, dtype=float)
    if not np.all(beta > 0):
        raise ParameterError("rates beta must all be positive")
    reach = float(np.max(np.abs(svals))) if np.size(svals) else 1.0
    center, radius = _pole_circle(beta, reach)
    # the reflected poles at -beta must stay outside
    radius = min(radius, 0.5 * ((beta.max() - beta.min()) / 2.0 + center + beta.min()))
    if radius <= (beta.max() - beta.min()) / 2.0:
        raise ParameterError("cannot separate poles at +beta from -beta")
    circle = make_contour("circle", center=center, radius=radius,
                          nodes=_circle_nodes(reach, radius))
    # prod (beta_i + w)/(beta_i - w) = (-1)^n prod (w + beta_i)/(w - beta_i)
    extra = _log_poly(circle.nodes, -beta) - _log_poly(circle.nodes, beta)
    sign = -((-1.0) ** len(beta))
    return sign * np.real(_sum_circle(svals, circle, extra))


def _piflat_circle(beta, reach):
    beta = np.asarray(beta, dtype=float)
    if not np.all(beta > 0):
        raise ParameterError("rates beta must all be positive")
    center, radius = _pole_circle(beta, reach)
    radius = min(radius, 0.5 * ((beta.max() - beta.min()) / 2.0 + center + beta.min()))
    if radius <= (beta.max() - beta.min()) / 2.0:
        raise ParameterError("cannot separate poles at +beta from -beta")
    circle = make_contour("circle", center=center, radius=radius,
                          nodes=_circle_nodes(reach, radius))
    extra = _log_poly(circle.nodes, -beta) - _log_poly(circle.nodes, beta)
    sign = -((-1.0) ** len(beta))
    factor = sign * circle.weights * np.exp(extra) / _TWO_PI_I
    return circle.nodes, factor


def _piflat_grid(beta, xs, ys):
    """Separable fill of the rate kernel on a grid (exps on rows, not pairs)."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    reach = float(np.max(np.abs(xs)) + np.max(np.abs(ys)))
    nodes, factor = _piflat_circle(beta, reach)
    U = np.exp(np.multiply.outer(-xs, nodes))
    V = np.exp(np.multiply.outer(-ys, nodes))
    return ((U * factor[None, :]) @ V.T).real


def k_piflat(beta, x, y):
    """Symmetric exponential-product kernel for the point-to-line passage law.

    K(x, y) = -(1/2 pi i) * oint e^{-(x+y)w} prod_i (beta_i + w)/(beta_i - w) dw
    over a counter clockwise circle enclosing the poles +beta_i and excluding
    all -beta_i.  Depends on x + y only.
    """
    x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    vals = _piflat_eval(beta, (x + y).ravel()).reshape(x.shape)
    return float(vals) if vals.ndim == 0 else vals


def k_loe(n, x, y):
    """Order-n pole kernel of the largest squared-singular-value law (all rates 1)."""
    if n < 1:
        raise ParameterError("need n >= 1")
    return k_piflat(np.ones(int(n)), x, y)


def k_bridge(nu, r, x, y):
    """Kernel for the running maximum of the top noncolliding bridge.

    Equals the rate kernel with beta_i = 1 - nu_i/r and both arguments
    shifted by r^2 (the e^{-2 r^2 w} factor).  Requires r > max(nu, 0).
    """
    nu = np.atleast_1d(np.asarray(nu, dtype=float))
    if not r > max(nu.max(), 0.0):
        raise DomainError("need r > max(nu_i, 0), got r=%r" % (r,))
    beta = 1.0 - nu / r
    return k_piflat(beta, np.asarray(x, float) + r * r, np.asarray(y, float) + r * r)


# ---------------------------------------------------------------------------
# building-block kernels S_{m,-t}, S-bar, S-hypo
# ---------------------------------------------------------------------------

def s_minus(mu, t, x, y):
    """Closed-contour kernel with simple poles at the drifts.

    (1/2 pi i) oint e^{-(t/2) z^2 + (x-y) z} prod (z - mu_i)^{-1} dz over a
    counter clockwise circle of radius 1 + max|mu| around the drift midpoint.
    """
    mu = _drifts(mu)
    if not t > 0:
        raise DomainError("need t > 0")
    x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    s = (x - y).ravel()
    center = 0.5 * (mu.min() + mu.max())
    radius = 1.0 + np.max(np.abs(mu))
    reach = float(np.max(np.abs(s))) if s.size else 1.0
    circle = make_contour("circle", center=center, radius=radius,
                          nodes=_circle_nodes(reach + t * radius, radius))
    extra = -0.5 * t * circle.nodes ** 2 - _log_poly(circle.nodes, mu)
    vals = np.real(_sum_circle(-s, circle, extra)).reshape(x.shape)
    return float(vals) if vals.ndim == 0 else vals


def s_bar(mu, t, x, y):
    """Vertical-line kernel with the drift product in the numerator.

    (1/2 pi i) int e^{(t/2) z^2 + (x-y) z} prod (z - mu_i) dz over an upward
    vertical line; equivalently prod_i(-d/dy - mu_i) applied to the heat
    kernel (see :func:`s_bar_hermite`).  The line is placed through the
    Gaussian saddle -(x-y)/t, where the integrand does not oscillate.
    """
    mu = _drifts(mu)
    if not t > 0:
        raise DomainError("need t > 0")
    x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    s = (x - y).ravel()
    vals = np.empty_like(s)
    # one line per saddle band: the saddle of (t/2)z^2 + s z sits at -s/t
    for sbar, mask in _band_means(s, width=4.0 * np.sqrt(t)):
        line = _vertical_auto(-sbar / t, t, len(mu),
                              slope_bound=0.5 * (s[mask].max() - s[mask].min()) + len(mu))
        expo = (0.5 * t * line.nodes[None, :] ** 2 + s[mask][:, None] * line.nodes[None, :]
                + _log_poly(line.nodes, mu)[None, :])
        m = expo.real.max(axis=1)
        vals[mask] = np.real((np.exp(expo - m[:, None]) @ line.weights) * np.exp(m) / _TWO_PI_I)
    vals = vals.reshape(x.shape)
    return float(vals) if vals.ndim == 0 else vals


def s_bar_hermite(mu, t, x, y):
    """Closed form of :func:`s_bar`: prod_i(-d/dy - mu_i) heat_kernel(t,x,y)."""
    mu = _drifts(mu)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    u = (x - y) / np.sqrt(t)
    # probabilists' Hermite polynomials He_j(u)
    m = len(mu)
    He = [np.ones_like(u), u]
    for j in range(1, m + 1):
        He.append(u * He[j] - j * He[j - 1])
    coeffs = np.poly(mu)  # monic, roots mu: prod(D - mu_i) with D = -d/dy
    acc = 0.0
    for k, c in enumerate(coeffs):  # c multiplies D^(m-k); D^j heat = (-1)^j t^(-j/2) He_j
        j = m - k
        acc = acc + c * (-1.0) ** j * t ** (-0.5 * j) * He[j]
    return acc * heat_kernel(t, x, y)


def s_hypo_flat(mu, t, x, y):
    """Flat-boundary hypograph kernel via the reflection principle.

    For x <= 0 it is s_bar; for x > 0 the reflected two-branch form
    1{y<=0} s_bar(x, y) + 1{y>0} s_bar(-x, y).
    """
    x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    direct = s_bar(mu, t, x, y)
    reflected = s_bar(mu, t, -x, y)
    pos = np.asarray(x) > 0
    out = np.where(pos, np.where(np.asarray(y) > 0, reflected, direct), direct)
    return float(out) if np.ndim(out) == 0 else out


def s_hypo_mc(b, mu, t, x, y, paths=4000, stream=None, steps=None):
    """Monte Carlo hypograph kernel for a general boundary.

    Runs an Euler walk from x, stops at the first grid time with
    W <= b(s), and averages s_bar(t - tau, W_tau, y); returns an
    :class:`~noncolliding.montecarlo.MCEstimate`.  Hitting is detected by
    sign crossing on the grid (no bridge correction), biased ~sqrt(step).
    """
    from .montecarlo import MCEstimate
    from .rng import RngStream

    if b.kind == "narrow_wedge":
        raise ParameterError("narrow wedge boundary has a closed form; use s_hypo_flat/k_nw")
    if paths < 1000:
        raise ParameterError("need at least 1000 paths")
    stream = stream or RngStream(DEFAULTS["seed"])
    steps = steps or DEFAULTS["euler_steps"]
    if float(x) <= float(b(0.0)):
        val = s_bar(mu, t, x, y)
        return MCEstimate(value=val, std_error=0.0, n_samples=paths, seed=stream.seed)

    gen = stream.generator()
    half = paths // 2
    h = t / steps
    increments = gen.standard_normal((half, steps)) * np.sqrt(h)
    values = np.zeros(2 * half)
    for sgn, block in ((1.0, slice(0, half)), (-1.0, slice(half, 2 * half))):
        W = np.full(half, float(x))
        alive = np.ones(half, dtype=bool)
        hit_val = np.zeros(half)
        for k in range(steps):
            W = W + sgn * increments[:, k]
            s_now = (k + 1) * h
            crossed = alive & (W <= float(b(s_now)))
            if np.any(crossed):
                rem = t - s_now
                if rem <= 0:
                    rem = h * 1e-6
                hit_val[crossed] = s_bar_hermite(mu, rem, W[crossed], float(y))
                alive[crossed] = False
        values[block] = hit_val
    est = float(values.mean())
    err = float(values.std(ddof=1) / np.sqrt(len(values)))
    return MCEstimate(value=est, std_error=err, n_samples=2 * half, seed=stream.seed)


# ---------------------------------------------------------------------------
# narrow-wedge and flat double-contour kernels
# ---------------------------------------------------------------------------

def _nw_flat_engine(mu, t1, t2, xs, ys, flat):
    """Shared evaluator for the narrow-wedge and flat kernels."""
    mu = _drifts(mu)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    m = len(mu)
    reach = float(np.max(np.abs(xs)))
    center, radius = _pole_circle(mu, reach)
    cw = make_contour("circle", center=center, radius=radius,
                      nodes=_circle_nodes(reach + t1 * radius, radius))
    d_min = max(center + radius, radius - center) + 0.5 if flat else center + radius + 0.5

    def psi_w(x, w):
        return 0.5 * t1 * w ** 2 - x * w + _log_poly(w, mu)

    def psi_z(y, z):
        return 0.5 * t2 * z ** 2 - y * z + _log_poly(z, mu)

    couplings = [(1.0, "-"), (1.0, "+")] if flat else [(1.0, "-")]
    out = np.zeros((len(xs), len(ys)))
    # one vertical contour per y-band keeps the line near the Gaussian saddle
    for ybar, mask in _band_means(ys, width=8.0 * np.sqrt(t2)):
        d = max(d_min, ybar / t2)
        slope = max(abs(t2 * d - ys[mask].min()), abs(t2 * d - ys[mask].max())) + m + 1.0
        cz = _vertical_auto(d, t2, m, slope)
        block = _pair_eval(xs, ys[mask], cw, cz, psi_w, psi_z, couplings)
        out[:, mask] = block.real
    if flat:
        out = out * (ys > 0)[None, :]
    return out


def _flat_far_time_engine(mu, t, xs, ys):
    """Flat kernel at equal large times via the extracted z = -w residue.

    For all-negative drifts the vertical line shifts to Re z = 0, picking
    the residue at z = -w, which is exactly the rate kernel k_piflat; the
    two remaining double integrals decay like e^{-t s^2/2} and evaluate
    without cancellation on the imaginary axis.
    """
    mu = _drifts(mu)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    beta = -mu
    reach = float(np.max(np.abs(xs)))
    center, radius = _pole_circle(mu, reach, max_clear=min(1.0, 0.4 * float(-mu.max())))
    if center + radius >= -1e-9:
        raise ParameterError("far-time decomposition needs all drifts negative")
    cw = make_contour("circle", center=center, radius=radius,
                      nodes=_circle_nodes(reach + t * radius, radius))
    m = len(mu)

    def psi_w(x, w):
        return 0.5 * t * w ** 2 - x * w + _log_poly(w, mu)

    def psi_z(y, z):
        return 0.5 * t * z ** 2 - y * z + _log_poly(z, mu)

    slope = float(np.max(np.abs(ys))) + m + 1.0
    cz = _vertical_auto(0.0, t, m, slope)
    rem = _pair_eval(xs, ys, cw, cz, psi_w, psi_z, [(1.0, "-"), (1.0, "+")]).real
    residue = _piflat_eval(beta, (xs[:, None] + ys[None, :]).ravel()).reshape(len(xs), len(ys))
    return (rem + residue) * (ys > 0)[None, :]


def _flat_uses_decomposition(mu, t1, t2, d_min):
    mu = _drifts(mu)
    return bool(t1 == t2 and mu.max() < -0.3 and 0.5 * t1 * d_min ** 2 > 8.0)


def k_nw(mu, t1, x, t2, y):
    """Narrow-wedge double-contour kernel.

    (1/2 pi i)^2 oint_gamma dw int_Gamma dz
    e^{(t2/2) z^2 - y z} / e^{(t1/2) w^2 - x w} * prod (z-mu_i)/(w-mu_i) / (z-w),
    with gamma a counter clockwise circle around the drifts and Gamma a
    vertical line strictly to its right.
    """
    if not (t1 > 0 and t2 > 0):
        raise DomainError("need positive times")
    out = _nw_flat_engine(mu, t1, t2, x, y, flat=False)
    return float(out[0, 0]) if np.ndim(x) == 0 and np.ndim(y) == 0 else out


def k_flat(mu, t1, x, t2, y):
    """Flat-boundary kernel: 1/(z-w) and 1/(z+w) couplings, both times 1{y>0}."""
    if not (t1 > 0 and t2 > 0):
        raise DomainError("need positive times")
    mu_arr = _drifts(mu)
    center, radius = _pole_circle(mu_arr, float(np.max(np.abs(np.atleast_1d(x)))))
    d_min = max(center + radius, radius - center) + 0.5
    if _flat_uses_decomposition(mu_arr, t1, t2, d_min):
        out = _flat_far_time_engine(mu_arr, t1, x, y)
    else:
        out = _nw_flat_engine(mu_arr, t1, t2, x, y, flat=True)
    return float(out[0, 0]) if np.ndim(x) == 0 and np.ndim(y) == 0 else out


def compose_kernels(left, right, u_lo, u_hi, n=400):
    """Numerical composition int_{u_lo}^{u_hi} left(x, u) right(u, y) du.

    Test oracle for the analytic 1/(z-w) resolution inside the extended
    kernels; ``left``/``right`` take broadcastable array arguments.
    """
    u, wu = gauss_legendre(u_lo, u_hi, n)

    def composed(x, y):
        L = left(np.asarray(x)[..., None], u)
        R = right(u, np.asarray(y)[..., None])
        return np.sum(L * R * wu, axis=-1)

    return composed


# ---------------------------------------------------------------------------
# arithmetic-spectrum kernel (Gamma-ratio double contour)
# ---------------------------------------------------------------------------

def _k_delta_engine(delta, xs, ys, gamma_func, rec_extension=1.0, node_factor=1.0):
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    d2 = delta * delta
    # vertical line through Re z = 1: Gaussian decay + 1/|Gamma| growth e^{pi|s|/2}
    T = (np.pi / 2 + np.sqrt(np.pi ** 2 / 4 + 2.0 * d2 * (_DROP + 10.0))) / d2
    slope = max(abs(d2 - ys.min()), abs(d2 - ys.max())) + 4.0
    n_z = int(min(16384, max(256, 64 + 1.4 * slope * T) * node_factor))
    cz = make_contour("vertical", offset=1.0, half_height=T, nodes=n_z)
    # half-infinite rectangle through 1/2 with half-height 1/2, truncated left
    xmin = xs.min()
    left = -(max(0.0, -xmin) / d2 + np.sqrt(2.0 * (_DROP + 10.0)) / delta + 3.0) * rec_extension
    n_rec = int(max(192, (0.5 - left) * DEFAULTS["rectangle_nodes_per_unit"]) * node_factor)
    crec = make_contour("rectangle", left=left, right=0.5, half_height=0.5, nodes=n_rec)

    lg_w = np.log(gamma_func(crec.nodes))
    lg_z = np.log(gamma_func(cz.nodes))

    def psi_w(x, w):  # denominator side: e^{(D^2/2) w^2 - x w} / Gamma(w)
        return 0.5 * d2 * w ** 2 - x * w - lg_w[None, :]

    def psi_z(y, z):
        return 0.5 * d2 * z ** 2 - y * z - lg_z[None, :]

    return _pair_eval(xs, ys, crec, cz, psi_w, psi_z, [(1.0, "-")])


def k_delta(delta, x, y, gamma_func=None, _complex=False):
    """Gamma-ratio kernel of the arithmetic-spectrum edge law.

    Double contour integral of e^{(D^2/2)(z^2 - zeta^2) - yz + x zeta}
    * Gamma(zeta)/Gamma(z) / (z - zeta) with zeta on the truncated
    half-infinite rectangle through 1/2 and z on the vertical line Re z = 1.
    ``gamma_func`` may replace the Gamma evaluator (e.g. by a truncated
    product) for validation.
    """
    if not delta > 0:
        raise DomainError("need delta > 0")
    gamma_func = complex_gamma if gamma_func is None else gamma_func
    out = _k_delta_engine(delta, x, y, gamma_func)
    val = out[0, 0] if np.ndim(x) == 0 and np.ndim(y) == 0 else out
    if _complex:
        return val
    return float(val.real) if np.ndim(val) == 0 else val.real


# ---------------------------------------------------------------------------
# Airy kernels
# ---------------------------------------------------------------------------

def airy_kernel_ext(t1, x, t2, y):
    """Extended Airy kernel as the two-branch Ai-product integral."""
    dt = t2 - t1
    if t2 <= t1:
        # int_0^inf e^{z dt} Ai(x+z) Ai(y+z) dz; Ai^2 decays e^{-(4/3)v^{3/2}}
        top = max(x, y)
        zmax = 8.0 + max(0.0, (0.75 * _DROP) ** (2.0 / 3.0) - top)
        if dt < 0:
            zmax = min(zmax, _DROP / (-dt) + 10.0)
        edges = np.linspace(0.0, zmax, max(8, int(zmax)) + 1)
        z = np.concatenate([gauss_legendre(a, b, 16)[0] for a, b in zip(edges[:-1], edges[1:])])
        w = np.concatenate([gauss_legendre(a, b, 16)[1] for a, b in zip(edges[:-1], edges[1:])])
        vals = np.exp(z * dt) * _airy_any_real(x + z) * _airy_any_real(y + z)
        return float(np.sum(w * vals))
    # t2 > t1: -int_{-inf}^0, exponential decay e^{z dt}, oscillatory Ai tails
    zmax = (_DROP + 10.0) / dt
    edges = [0.0]
    while edges[-1] < zmax:
        depth = edges[-1] + 1.0 - min(0.0, min(x, y))
        edges.append(edges[-1] + min(2.0, np.pi / (2.0 * np.sqrt(depth)) * 4.0 + 0.05))
    acc = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        z, w = gauss_legendre(-b, -a, 12)
        acc += np.sum(w * np.exp(z * dt) * _airy_any_real(x + z) * _airy_any_real(y + z))
    return float(-acc)


def _jairy_contours(tmax, xlo, ylo, mode, delta1=None, delta2=None):
    delta2 = (tmax + 0.5) if delta2 is None else float(delta2)
    delta1 = (delta2 + 0.5) if delta1 is None else float(delta1)
    if delta2 >= delta1:
        raise ParameterError("need delta2 < delta1, got %r >= %r" % (delta2, delta1))
    if mode not in ("wedge", "vertical"):
        raise ParameterError("mode must be 'wedge' or 'vertical'")

    def psi_z_ray(sign_dir):
        u = np.exp(sign_dir * 1j * np.pi / 3.0)
        return lambda tau: ((delta1 + u * tau) ** 3 / 3.0 + tmax * (delta1 + u * tau) ** 2
                            - min(ylo, 0.0) * (delta1 + u * tau)) * (-1.0)

    if mode == "vertical":
        # numerator side z on Re = delta1
        q = 2.0 * (delta1 - tmax)
        Tz = np.sqrt(2.0 * (_DROP + 10.0) / q) + 2.0
        nz = int(min(8192, max(256, 64 + 1.4 * (abs(ylo) + 3 * delta1 + Tz ** 2) * Tz)))
        cz = make_contour("vertical", offset=delta1, half_height=Tz, nodes=nz)
    else:
        # wedge through delta1 at +-pi/3: cubic decay, phase handled adaptively
        tau, wt = adaptive_ray(psi_z_ray(+1), max_length=12.0 + np.sqrt(abs(ylo)) * 2.0)
        up = np.exp(1j * np.pi / 3.0)
        lo = np.exp(-1j * np.pi / 3.0)
        nodes = np.concatenate([delta1 + lo * tau[::-1], delta1 + up * tau])
        weights = np.concatenate([-lo * wt[::-1], up * wt])
        from .contours import Contour
        cz = Contour("wedge", nodes, weights, False, tau.max(),
                     {"apex": delta1, "angle": np.pi / 3.0, "nodes": len(nodes)})

    if mode == "vertical":
        q = 2.0 * (delta2 - (-tmax))
        Tw = np.sqrt(2.0 * (_DROP + 10.0) / q) + 2.0
        nw = int(min(8192, max(256, 64 + 1.4 * (abs(xlo) + 3 * delta2 + Tw ** 2) * Tw)))
        cw = make_contour("vertical", offset=-delta2, half_height=Tw, nodes=nw)
    else:
        u = np.exp(1j * 5.0 * np.pi / 6.0)

        def psi_w_ray(tau):
            w = delta2 + u * tau
            return w ** 3 / 3.0 + (-tmax) * w ** 2 - max(xlo, 0.0) * w

        qw = delta2 - tmax  # quadratic decay coefficient along the 5pi/6 rays
        Lw = 3.6 * max(abs(xlo), 1.0) / max(qw, 0.25) + np.sqrt(2 * (_DROP + 10.0) / max(qw, 0.25)) + 4.0
        tau, wt = adaptive_ray(psi_w_ray, max_length=Lw)
        lo = np.conj(u)
        nodes = np.concatenate([delta2 + lo * tau[::-1], delta2 + u * tau])
        weights = np.concatenate([-lo * wt[::-1], u * wt])
        from .contours import Contour
        cw = Contour("wedge", nodes, weights, False, tau.max(),
                     {"apex": delta2, "angle": 5 * np.pi / 6.0, "nodes": len(nodes)})
    return cw, cz


def _jairy_eval(t1, t2, xs, ys, mode="wedge", delta1=None, delta2=None):
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    tmax = max(abs(t1), abs(t2))
    cw, cz = _jairy_contours(tmax, float(xs.min()), float(ys.min()), mode, delta1, delta2)

    def psi_w(x, w):
        return w ** 3 / 3.0 + t1 * w ** 2 - x * w

    def psi_z(y, z):
        return z ** 3 / 3.0 + t2 * z ** 2 - y * z

    return _pair_eval(xs, ys, cw, cz, psi_w, psi_z, [(1.0, "-")]).real


def j_airy(t1, x, t2, y, mode="wedge", delta1=None, delta2=None):
    """Double-contour form of the extended Airy kernel.

    (1/2 pi i)^2 int_{G-} dw int_{G+} dz e^{z^3/3 + t2 z^2 - yz} /
    e^{w^3/3 + t1 w^2 - xw} / (z - w).  ``mode='wedge'`` uses the wedge
    deformations (angles pi/3 and 5pi/6 with apexes delta1 > delta2 >
    max|t|); ``mode='vertical'`` keeps vertical lines at +-delta.
    """
    out = _jairy_eval(t1, t2, x, y, mode, delta1, delta2)
    return float(out[0, 0]) if np.ndim(x) == 0 and np.ndim(y) == 0 else out


def kixjy_conjugation(t, u):
    """The determinant-neutral factor relating the two extended-kernel forms.

    -e^{(t2-t1) d^2} 1{t2>t1} + J_Airy(t1, x; t2, y) equals
    c(t1, x)/c(t2, y) times the extended Airy kernel at the parabolically
    shifted points (x + t1^2, y + t2^2), with c(t, u) = e^{-2t^3/3 - t u}
    (verified numerically to machine precision; c cancels in every
    Fredholm determinant).
    """
    return np.exp(-2.0 * t ** 3 / 3.0 - t * u)


def airy_block_kernel(times, xi, i, x, j, y, mode="wedge"):
    """Extended-kernel block coupling observation times of the Airy process.

    K(i,x;j,y) = -e^{(t_j - t_i) d^2}(x+xi_i, y+xi_j) 1{t_j > t_i}
                 + J_Airy(t_i, x+xi_i; t_j, y+xi_j)
    (the heat operator here is e^{t d^2}, variance 2t), normalized by the
    :func:`kixjy_conjugation` ratio so that the block equals
    K_Airy(t_i, x+xi_i+t_i^2; t_j, y+xi_j+t_j^2) pointwise and decays in
    both arguments.
    """
    times = np.asarray(times, dtype=float)
    xi = np.asarray(xi, dtype=float)
    if np.any(np.diff(times) <= 0):
        raise ParameterError("times must be strictly increasing")
    t_i, t_j = times[i], times[j]
    val = j_airy(t_i, x + xi[i], t_j, y + xi[j], mode=mode)
    if t_j > t_i:
        val = val - heat_op_full(t_j - t_i, x + xi[i], y + xi[j])
    return val * float(kixjy_conjugation(t_j, y + xi[j]) / kixjy_conjugation(t_i, x + xi[i]))


# ---------------------------------------------------------------------------
# extended Brownian and Hermitian kernels
# ---------------------------------------------------------------------------

def brownian_block_kernel(b, mu, times, thresholds, i, x, j, y, mc_paths=20000, stream=None):
    """Extended kernel of boundary-driven Brownian last passage percolation.

    -e^{(t_j-t_i) d^2/2}(x,y) 1{t_i < t_j} + (S_{m,-t_i} S^hypo(b)_{m,t_j})(x,y);
    the composed term has closed forms for the narrow-wedge and flat
    boundaries and falls back to Monte Carlo composition otherwise (the
    thresholds enter the determinant domain, not the kernel).
    """
    times = np.asarray(times, dtype=float)
    if np.any(times <= 0) or np.any(np.diff(times) <= 0):
        raise ParameterError("times must be positive and strictly increasing")
    t_i, t_j = times[i], times[j]
    if b.kind == "narrow_wedge":
        val = k_nw(mu, t_i, x, t_j, y)
    elif b.kind == "flat":
        val = k_flat(mu, t_i, x, t_j, y)
    else:
        mu_arr = _drifts(mu)
        lo = -6.0 * np.sqrt(t_j) + min(0.0, float(b(times[-1])))
        hi = max(4.0 * np.sqrt(t_j), abs(x) + 1.0)
        u, wu = gauss_legendre(lo, hi, 160)
        sm = s_minus(mu_arr, t_i, x, u)
        sh = np.array([s_hypo_mc(b, mu_arr, t_j, ui, y, paths=mc_paths,
                                 stream=None if stream is None else stream.substream(k)).value
                       for k, ui in enumerate(u)])
        val = float(np.sum(wu * sm * sh))
    if t_i < t_j:
        val = val - heat_op_half(t_j - t_i, x, y)
    return val


def hermitian_block_kernel(nu, times, thresholds, i, x, j, y):
    """Extended kernel for the largest eigenvalue of Brownian motion plus a
    Hermitian shift, by time inversion of the narrow-wedge kernel.

    K(i,x;j,y) = -e^{(1/t_j - 1/t_i) d^2/2}(x + a_i/t_i, y + a_j/t_j) 1{t_j < t_i}
                 + K_nw(1/t_i, x + a_i/t_i; 1/t_j, y + a_j/t_j)  (drifts nu).
    The heat indicator is reversed relative to the forward-time kernel.
    """
    times = np.asarray(times, dtype=float)
    thresholds = np.asarray(thresholds, dtype=float)
    if np.any(times <= 0) or np.any(np.diff(times) <= 0):
        raise ParameterError("times must be positive and strictly increasing")
    xs = x + thresholds[i] / times[i]
    ys = y + thresholds[j] / times[j]
    val = k_nw(nu, 1.0 / times[i], xs, 1.0 / times[j], ys)
    if times[j] < times[i]:
        val = val - heat_op_half(1.0 / times[j] - 1.0 / times[i], xs, ys)
    return val
