"""Point-to-line passage laws: determinant, ratio formula, and sampling.

The law of the best up/right passage value across the exponential-weight
triangle (rates beta_i + beta_{n+1-j}) is a one-contour Fredholm
determinant.  It must agree with the classical ratio-of-determinants
formula and with direct simulation.

Run:  python3 demos/02_point_to_line.py
"""

import numpy as np

from noncolliding import (RngStream, cdf_loe_max, cdf_piflat, det_ratio, dkw_band,
                          empirical_cdf, sample_loe_max, sample_piflat)

beta = [1.0, 1.5, 2.0]
print("rates:", beta)

print("\n== determinant vs ratio formula ==")
for a in (0.5, 1.0, 2.0):
    d1, d2 = cdf_piflat(beta, a), det_ratio(beta, a)
    print("a=%4.1f  det=%.12f  ratio=%.12f  |diff|=%.2e" % (a, d1, d2, abs(d1 - d2)))

print("\n== n = 1 sanity: exponential law ==")
for a in (0.25, 1.0):
    print("a=%s: det=%.12f  1-e^{-2a}=%.12f" % (a, cdf_piflat([1.0], a),
                                                1 - np.exp(-2 * a)))

print("\n== Monte Carlo cross-check (100k samples) ==")
x = sample_piflat(beta, stream=RngStream(42), samples=100000)
grid = np.quantile(x, np.linspace(0.05, 0.95, 10))
emp = empirical_cdf(x, grid)
det = np.array([cdf_piflat(beta, g) for g in grid])
print("   a        empirical   determinant")
for g, e, d in zip(grid, emp, det):
    print("%8.4f  %9.5f  %11.7f" % (g, e, d))
print("max |diff| = %.4f, DKW 95%% band = %.4f"
      % (np.max(np.abs(emp - det)), dkw_band(len(x))))

print("\n== largest eigenvalue of the Gaussian Gram ensemble ==")
lam = sample_loe_max(3, stream=RngStream(7), samples=50000)
for v in (2.0, 6.0, 10.0):
    print("P(lambda_max <= %4.1f): mc=%.4f  det=%.6f"
          % (v, np.mean(lam <= v), cdf_loe_max(3, v / 4)))
