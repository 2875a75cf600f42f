"""Finite-dimensional laws of the Airy process.

Single-time values reproduce the GUE Tracy-Widom distribution; two-time
determinants are stationary once the parabola is added back, and collapse
onto the single-time law as the times merge.

Run:  python3 demos/04_airy_process.py
"""

import numpy as np

from noncolliding import airy_fdd, airy_kernel_ext, j_airy

print("== single-time law (GUE Tracy-Widom) ==")
for xi in (-3.0, -2.0, -1.0, 0.0, 1.0, 2.0):
    print("F(%5.1f) = %.10f" % (xi, airy_fdd([0.0], [xi])))

print("\n== the two kernel representations agree ==")
for (x, y) in [(0.0, 0.0), (-1.0, 0.5), (1.0, 1.0)]:
    a = airy_kernel_ext(0.0, x, 0.0, y)
    b = j_airy(0.0, x, 0.0, y)
    print("K(%5.2f,%5.2f): series %.12f  contour %.12f  |diff| %.1e"
          % (x, y, a, b, abs(a - b)))

print("\n== two-time determinants ==")
z = np.array([1.3, 1.1])
t = np.array([0.0, 0.5])
v1 = airy_fdd(t, z - t ** 2)
v2 = airy_fdd(t + 0.3, z - (t + 0.3) ** 2)
print("stationarity under time shift: %.12f vs %.12f" % (v1, v2))

single = airy_fdd([0.0], [0.4])
print("\ngap collapse toward the single-time value %.8f:" % single)
for gap in (0.4, 0.2, 0.1, 0.05):
    v = airy_fdd([0.0, gap], [0.4, 1.4])
    print("  gap %.2f: %.8f  (diff %.2e)" % (gap, v, abs(v - single)))
