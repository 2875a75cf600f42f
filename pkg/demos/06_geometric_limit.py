"""Inhomogeneous geometric last passage percolation and its diffusive limit.

Exact transition determinants at small sizes, simulation of the corner
recursion, and the convergence of the rescaled discrete kernels to the
continuum heat and building-block kernels.

Run:  python3 demos/06_geometric_limit.py
"""

import numpy as np

from noncolliding import (GeomParams, RngStream, drift_params, heat_kernel, q_geom,
                          s_bar, s_geom, s_minus, sample_geom_lpp, sbar_geom,
                          scaling_bridge, transition_prob)

print("== exact transition law, N = 2 columns ==")
params = GeomParams((0.3, 0.5))
x = [0, 1]
G = sample_geom_lpp(params, x, 2, RngStream(1), samples=200000)
print("  y        P(det)       frequency")
for y in [(0, 1), (1, 2), (2, 3), (1, 4)]:
    p = transition_prob(x, list(y), 2, params)
    f = np.mean((G[:, 0] == y[0]) & (G[:, 1] == y[1]))
    print(" %s  %.8f   %.5f" % (y, p, f))

print("\n== rescaled kernels approach their Brownian limits ==")
mu = [0.5, -0.3]
s, t = 0.2, 0.7
xx, yy = 0.3, -0.2
print("   N      Q error      S error      Sbar error")
for N in (100, 1000, 10000):
    p = drift_params(mu, N)
    n1, z1 = scaling_bridge(N, s, xx)
    n2, z2 = scaling_bridge(N, t, yy)
    xe = -(z1 + 2 * N * s) / np.sqrt(2 * N)
    ye = -(z2 + 2 * N * t) / np.sqrt(2 * N)
    eQ = abs(np.sqrt(2 * N) * q_geom(n2 - n1, z1, z2, p) - heat_kernel(t - s, xe, ye))
    _, z2s = scaling_bridge(N, 0.0, yy)
    ys = -z2s / np.sqrt(2 * N)
    eS = abs(np.sqrt(2 * N) * s_geom(2, n1, z1, z2s, p) / (N / 2.0)
             - s_minus(mu, s, xe, ys))
    nb = int(np.floor(N * (t - s)))
    eSb = abs(np.sqrt(2 * N) * sbar_geom(2, nb, z1, z2, p) * (N / 2.0)
              - s_bar(mu, t - s, xe, ye))
    print("%6d   %.6f    %.6f    %.6f" % (N, eQ, eS, eSb))
