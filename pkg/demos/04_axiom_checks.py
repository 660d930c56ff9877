"""
Checking the depth axioms
=========================

The checkers evaluate one property each and return a verdict with a
concrete witness on failure.  The bundled verification suite pairs every
check with its expected outcome: the properties that provably fail are
*supposed* to fail, and an unexpected pass is just as alarming as an
unexpected failure.
"""

import numpy as np

from fuzzydepth import (
    MetricSpec,
    check_p1,
    check_p2,
    check_p4a,
    crisp_interval,
    location_depth,
    make_frv,
    natural_depth,
    projection_depth,
    search_p3b_violation,
)
from fuzzydepth.verification import format_rows, run_suite, skewed_frv, three_atom_frv

x = three_atom_frv()
proj = lambda a, x_: projection_depth(a, x_)
nat1 = lambda a, x_: natural_depth(a, x_, 1.0)

# P1: projection depth is affine invariant, metric depths are not
transforms = [(np.array([[5.0]]), None)]
print("P1 under scaling by 5:")
print("  projection:", check_p1(proj, x, transforms).status)
print("  natural r=1:", check_p1(nat1, x, transforms).status, "(scaling changes distances)")

# P2: the middle atom is the symmetry center
print("\nP2 at the middle atom:")
print(" ", check_p2(proj, crisp_interval(2.0, 3.0), x, list(x.atoms)).note)

# P3b: monotonicity along metric-collinear triples can genuinely fail for
# the projection depth; the randomized search returns the witness
verdict = search_p3b_violation(
    proj, skewed_frv(), crisp_interval(0.0, 5.0), MetricSpec("d_r", 1.0), seed=0
)
print("\nP3b search on a skewed sample:", verdict.status)
if verdict.witness:
    print(f"  depth mid point {verdict.witness['depth_mid']:.4f}"
          f" < depth far point {verdict.witness['depth_far']:.4f}")

# P4a: theta=0 ignores spread, so blowing up an interval never lowers it
loc0 = lambda a, x_: location_depth(a, x_, 2.0, 0.0)
sym = make_frv([crisp_interval(-1.0, 1.0)])
v = check_p4a(loc0, sym, crisp_interval(-1.0, 1.0), crisp_interval(-1.0, 1.0))
print("\nP4a for theta=0 on growing symmetric intervals:", v.status)
print("  depths along the trajectory:", [round(d, 4) for d in v.witness["depths"]])

# the full suite compares every verdict with its expectation
rows, ok = run_suite("p4", seed=0)
print("\nverification suite, group p4:")
for line in format_rows(rows):
    print(" ", line)
print("all as expected:", ok)
