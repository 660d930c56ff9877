"""
Trapezoidal fuzzy numbers and their arithmetic
==============================================

A fuzzy number is stored by its alpha-levels: for every membership
threshold alpha the level is a closed interval [lo(alpha), hi(alpha)].
Sums, scalings and convex combinations all work level by level.
"""

import numpy as np

from fuzzydepth import (
    DirectionGrid,
    add,
    convex_combo,
    crisp_interval,
    grid_zonotope,
    make_trapezoid,
    matrix_transform,
    scale,
    uniform_alphas,
)

# "roughly between 2 and 5, certainly between 1 and 6"
a = make_trapezoid(1.0, 2.0, 5.0, 6.0)
print("A = Tra(1, 2, 5, 6)")
for alpha in (0.0, 0.5, 1.0):
    print(f"  level {alpha:.1f}: {a.level(alpha)}")

# a crisp interval is the degenerate trapezoid with a rectangular membership
b = crisp_interval(10.0, 12.0)
print("\nB = [10, 12] (crisp)")

# Minkowski sum: levels add endpoint by endpoint
s = add(a, b)
print("A + B levels:")
for alpha in (0.0, 1.0):
    print(f"  level {alpha:.1f}: {s.level(alpha)}")

# scaling by a negative number flips the interval
print("\n-2 * A at level 0:", scale(a, -2.0).level(0.0))

# convex combination interpolates between two shapes
mid = convex_combo(a, b, 0.5)
print("halfway from A to B, level 1:", mid.level(1.0))

# mid/spr split every level into its center and half-width
from fuzzydepth import mid, spr

for alpha in (0.0, 0.5, 1.0):
    print(f"mid/spr of A at alpha={alpha:.1f}:", mid(a, [1.0], alpha), spr(a, [1.0], alpha))

# planar fuzzy sets are sampled on a grid of directions; a zonotope
# (Minkowski sum of segments) makes a handy convex test shape
grid = DirectionGrid.circle(16)
alphas = uniform_alphas(5)
z = grid_zonotope([0.0, 0.0], [[1.0, 0.0], [0.0, 2.0]], grid, alphas)
print("\nplanar zonotope, support in direction (1,0):", z.support_column([1.0, 0.0])[0])

# rotating by a multiple of the grid step just permutes the stored values
quarter = np.array([[0.0, -1.0], [1.0, 0.0]])
rz = matrix_transform(z, quarter)
print("after a quarter turn, support in direction (0,1):", rz.support_column([0.0, 1.0])[0])
