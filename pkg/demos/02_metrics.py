"""
Distances between fuzzy numbers
===============================

Three families are implemented, all parameterized by an exponent r >= 1:

* d_r    - L^r average over alpha of the levelwise Hausdorff distance
           (r = inf gives the classical sup distance),
* rho_r  - L^r average of the support-function difference over both
           directions and alpha,
* d_r_theta - splits every level into mid (location) and spr (shape) and
           weights the spread term by theta >= 0.
"""

import numpy as np

from fuzzydepth import MetricSpec, crisp_interval, make_trapezoid

a = crisp_interval(1.0, 2.0)
b = crisp_interval(5.0, 7.0)
q = crisp_interval(3.0, 4.0)

# between [3,4] and [1,2] every level is 2 apart, so every metric says 2
for r in (1.0, 2.0, np.inf):
    print(f"d_{r}( [3,4], [1,2] )   =", MetricSpec("d_r", r)(q, a))

# against [5,7] the two endpoint gaps differ (2 and 3), and the families
# aggregate them differently
print("\nrho_1( [3,4], [5,7] )  =", MetricSpec("rho_r", 1.0)(q, b), "(average of 2 and 3)")
print("rho_2( [3,4], [5,7] )  =", MetricSpec("rho_r", 2.0)(q, b), "= sqrt(6.5)")
print("d_inf( [3,4], [5,7] )  =", MetricSpec("d_r", np.inf)(q, b), "(the worse endpoint)")

# rho_r grows with r; the sup-Hausdorff distance is an upper bound
print("\nrho_r from r=1 to r=8 against Tra(0,1,2,6):")
t = make_trapezoid(0.0, 1.0, 2.0, 6.0)
for r in (1.0, 2.0, 4.0, 8.0):
    print(f"  r={r:<3g} rho={MetricSpec('rho_r', r)(q, t):.6f}")
print("  sup-Hausdorff bound:", MetricSpec("d_r", np.inf)(q, t))

# theta trades location against shape: [1,2] and [0,3] share the mid 1.5,
# so the distance is purely theta-weighted spread
left, wide = crisp_interval(1.0, 2.0), crisp_interval(0.0, 3.0)
for theta in (0.0, 0.5, 1.0, 4.0):
    d = MetricSpec("d_r_theta", 2.0, theta=theta)(left, wide)
    print(f"theta={theta:<3g} d_2,theta([1,2],[0,3]) = {d:.6f}")
print("theta=0 ignores shape entirely, so it is only a pseudometric:")
print("  is_pseudometric:", MetricSpec("d_r_theta", 2.0, theta=0.0).is_pseudometric)
