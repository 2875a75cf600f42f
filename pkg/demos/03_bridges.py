"""Maxima of the top path among noncolliding Brownian bridges.

The all-time maximum ties the bridge ensemble to the Gaussian Gram
ensemble (squared maximum = quarter of a largest eigenvalue); the
running maximum over [0, s] is a flat-boundary kernel determinant at the
time a^2 s / (1 - s) with all drifts -1.  Both are sampled directly from
a pinned Hermitian bridge.

Run:  python3 demos/03_bridges.py
"""

import numpy as np

from noncolliding import (RngStream, cdf_bridge_allmax, cdf_bridge_runningmax,
                          cdf_loe_max, det_ratio, empirical_cdf, sample_bridge_topmax)

print("== all-time maximum, started from nu ==")
nu = np.array([-0.5, 0.0, 0.3])
for r in (1.0, 1.5, 2.0):
    F = cdf_bridge_allmax(nu, r)
    ratio = det_ratio(r - nu, r)
    print("F(%.1f) = %.10f   ratio formula %.10f   |diff| %.1e"
          % (r, F, ratio, abs(F - ratio)))

print("\n== zero-started chain to the Gram ensemble ==")
for n in (2, 4):
    for r in (0.9, 1.4):
        print("n=%d r=%.1f: bridge %.10f  vs  gram %.10f"
              % (n, r, cdf_bridge_allmax(np.zeros(n), r), cdf_loe_max(n, r * r)))

print("\n== running maximum over [0, 1/2], two bridges ==")
m = sample_bridge_topmax(2, 0.5, stream=RngStream(3), paths=30000, grid_step=1 / 4096)
for a in (0.8, 1.2, 1.6):
    print("a=%.1f: det %.6f   mc %.4f" % (a, cdf_bridge_runningmax(2, 0.5, a),
                                          np.mean(m <= a)))

print("\n== scalar bridge sanity: P(max <= a) = 1 - e^{-2a^2} ==")
m1 = sample_bridge_topmax(1, 1.0, stream=RngStream(4), paths=30000, grid_step=1 / 4096)
grid = np.array([0.5, 1.0, 1.5])
print("empirical:", np.round(empirical_cdf(m1, grid), 4))
print("exact    :", np.round(1 - np.exp(-2 * grid ** 2), 4))
