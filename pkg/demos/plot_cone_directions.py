"""
Circumcentric directions of cones
=================================

Normalize the generators, drop the redundant ones, and negate the
circumcenter of what is left. The result ``d`` lies in the polar cone and
so does every ``d + v`` with ``||v|| <= ||d||^2``.
"""

import numpy as np
from circumcone import (ConeGenerators, circumcentric_direction, interiorness_check,
                        is_pointed, polar_membership)

r = np.sqrt(2) / 2
g = ConeGenerators.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [r, r, 0]])
cd = circumcentric_direction(g)
print("conic base:\n", cd.base_used.base)
print("d =", cd.d, " radius =", cd.radius)
print("d in polar:", bool(polar_membership(cd.d, g)))
print("interiorness over 500 samples:", bool(interiorness_check(cd, g, trials=500)))

# A pointed cone can still give d = 0 once the base outgrows the dimension.
bar = ConeGenerators.from_rows([[0, r, r], [r, 0, r], [-0.5, 0.5, r], [0, 0, 1]])
print("four generators in R^3: pointed", is_pointed(bar)[0],
      "|d| =", np.linalg.norm(circumcentric_direction(bar).d))

# A line is not pointed, and the certificate is the convex combination hitting 0
ok, cert = is_pointed([[1, 0], [-1, 0]])
print("line pointed?", ok, "alpha =", cert.alpha)
