"""Edge universality for Hermitian Brownian motion plus an initial spectrum.

For a point cloud nu, the constants (b, a, d) solve the edge equations;
under the matching rescaling, the largest-eigenvalue law at finite n is
an exact extended-kernel determinant and approaches the Airy law.  The
inclusion criterion certifies clouds whose gaps b - nu_j stay sandwiched.

Run:  python3 demos/05_edge_universality.py
"""

import numpy as np

from noncolliding import (RngStream, airy_fdd, cdf_dyson_edge, edge_scaling,
                          empirical_cdf, f_class_bounds, sample_dyson_max)

print("== edge constants ==")
for label, nu in (("zero cloud, n=8", np.zeros(8)),
                  ("two atoms", np.array([0.0] * 5 + [1.0] * 5)),
                  ("uniform sample", np.random.default_rng(1).uniform(-1, 1, 20))):
    es = edge_scaling(nu)
    al, be = f_class_bounds(nu)
    print("%-18s b=%.6f a=%.6f d=%.6f  class bounds (%.3f, %.3f)"
          % (label, es.b, es.a, es.d, al, be))

print("\n== finite-n determinant vs the Airy limit (nu = 0) ==")
for n in (10, 50):
    for xi in (-1.0, 0.0, 1.0):
        v = cdf_dyson_edge(np.zeros(n), [0.0], [xi])
        w = airy_fdd([0.0], [xi])
        print("n=%3d xi=%4.1f: finite-n %.6f  airy %.6f  diff %+.4f" % (n, xi, v, w, v - w))

print("\n== sampling the rescaled eigenvalue at n = 80 ==")
n = 80
lam = sample_dyson_max(np.zeros(n), [1.0 / n], stream=RngStream(5), samples=3000)[:, 0]
resc = (lam - 2.0) * n ** (2.0 / 3.0)
grid = np.array([-2.0, -1.0, 0.0])
print("threshold   empirical   airy")
for g, e in zip(grid, empirical_cdf(resc, grid)):
    print("%8.1f   %9.4f   %.6f" % (g, e, airy_fdd([0.0], [g])))

print("\n== a two-time determinant at n = 50 ==")
v = cdf_dyson_edge(np.zeros(50), [0.0, 0.5], [0.3, 0.1])
w = airy_fdd([0.0, 0.5], [0.3, 0.1])
print("finite-n %.6f  airy %.6f" % (v, w))
