"""
Depth: ranking fuzzy observations from the center outward
=========================================================

An empirical fuzzy random variable is a finite set of fuzzy values with
weights.  A depth function scores any candidate set between 0 and 1; the
deepest candidate is the most central one.
"""

from fuzzydepth import (
    DepthConfig,
    crisp_interval,
    depth_table,
    format_table,
    location_depth,
    make_frv,
    natural_depth,
    outlyingness,
    projection_depth,
)

# two equally likely intervals, and a query sitting between them
x = make_frv([crisp_interval(1.0, 2.0), crisp_interval(5.0, 7.0)])
q = crisp_interval(3.0, 4.0)

print("query [3,4] against {[1,2], [5,7]}:")
print("  natural depth, r=1   :", natural_depth(q, x, 1.0), "(= 4/13)")
print("  natural depth, r=2   :", natural_depth(q, x, 2.0))
print("  projection depth     :", projection_depth(q, x))
print("  outlyingness         :", outlyingness(q, x))

# the projection depth standardizes by median/MAD, so the middle atom of a
# symmetric sample always scores exactly 1
x3 = make_frv([crisp_interval(0.0, 1.0), crisp_interval(2.0, 3.0), crisp_interval(4.0, 5.0)])
print("\nthree atoms, middle one:")
print("  projection depth:", projection_depth(crisp_interval(2.0, 3.0), x3))
print("  natural depth r=1:", natural_depth(crisp_interval(2.0, 3.0), x3, 1.0))

# location depths weight shape by theta; theta=0 only sees midpoints
print("\nlocation depth of [1,2] in {[0,2],[2,3]}:")
for theta in (0.0, 1.0, 5.0):
    print(f"  theta={theta:<3g}", location_depth(crisp_interval(1.0, 2.0),
                                                 make_frv([crisp_interval(0.0, 2.0),
                                                           crisp_interval(2.0, 3.0)]),
                                                 1.0, theta))

# depth_table ranks every atom of a sample in one call
report = depth_table(x3, config=DepthConfig(method="natural", r=2.0))
print("\nranking the three atoms by natural depth (r=2):")
print(format_table(report), end="")
