"""
Circumcenters of point sets
===========================

The circumcenter of a finite set is the point of its affine hull that is
equally far from every member. It need not exist.
"""

import numpy as np
from circumcone import circumcenter, circumcenter_equal_norm, perturbation_radius

# three corners of the unit simplex: the center is their barycenter
res = circumcenter(np.eye(3))
print("simplex corners ->", res.center, "spread", res.equidistance_spread)

# collinear points have no circumcenter
res = circumcenter([[0, 0], [1, 0], [2, 0]])
print("collinear       ->", res.center, "(exists:", res.exists, ")")

# Points of equal norm always have one. It is the projection of the
# origin onto their affine hull, and it makes a non-negative inner product
# with every point even after a perturbation of size ||c||^2 / eta.
r = np.sqrt(2) / 2
S = np.array([[0, r, r], [r, 0, r], [-0.5, 0.5, r]])
c = circumcenter_equal_norm(S)
print("equal norm      ->", c)
rad = perturbation_radius(c, 1.0)
rng = np.random.default_rng(0)
v = rng.standard_normal((1000, 3))
v *= 0.999999 * rad / np.linalg.norm(v, axis=1)[:, None]
print("smallest <c + v, u> over 1000 samples:", (S @ (c + v).T).min())
