"""
Inward directions at boundary points
====================================

At a boundary point the active constraint normals generate a cone, and the
circumcentric direction of that cone points into the feasible set.
"""

import numpy as np
from circumcone import (ConvexSystem, Polyhedron, QuadraticComponent, circum_direction_convex,
                        circum_direction_poly, max_feasible_step, validate_direction_convex)

# unit square, corner at the origin
box = Polyhedron([[-1, 0], [0, -1], [1, 0], [0, 1]], [0, 0, 1, 1])
x = np.zeros(2)
cd = circum_direction_poly(box, x)
step = max_feasible_step(box, x, cd.d)
print("box: d =", cd.d, "max step", step.max_step, "blocked by row", step.blocking_index)

# unit disk written as x'x - 1 <= 0, boundary point (1, 0)
disk = ConvexSystem([QuadraticComponent(2 * np.eye(2), [0, 0], -1)], 2, slater_point=[0, 0])
cd = circum_direction_convex(disk, [1, 0])
t = 10.0 ** np.arange(-4, 1)
val = validate_direction_convex(disk, [1, 0], cd.d, t)
for ti, gi in zip(val.t_grid, val.max_values):
    print(f"  t = {ti:g}: g = {gi:+.6f}")
