import json

import numpy as np
import pytest

from circumcone.circumcenter import circumcenter
from circumcone.cone import circumcentric_direction, is_pointed, polar_membership
from circumcone.errors import ResamplingError
from circumcone.feasible import AffineComponent, ConvexSystem, QuadraticComponent, active_set_poly
from circumcone.oracle import (
    brute_force_circumcenter,
    finite_diff_gradient_check,
    monte_carlo_polar,
    random_convex_system,
    random_equal_norm_set,
    random_point_set,
    random_pointed_cone,
    random_polyhedron,
)

E = np.eye(3)


def test_brute_force_examples():
    np.testing.assert_allclose(brute_force_circumcenter(E), [1 / 3] * 3, atol=1e-12)
    assert brute_force_circumcenter([[0, 0], [1, 0], [2, 0]]) is None
    np.testing.assert_array_equal(brute_force_circumcenter([[3.0, -1.0]]), [3, -1])


@pytest.mark.parametrize("seed", range(200))
def test_oracle_agreement(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 9))
    p = int(rng.integers(1, n + 2))
    S = random_point_set(n, p, seed=seed)
    if rng.random() < 0.2 and p >= 3:
        # force affine dependence so that most of these have no circumcenter
        S[-1] = 2 * S[0] - S[1]
    a = circumcenter(S).center
    b = brute_force_circumcenter(S)
    assert (a is None) == (b is None)
    if a is not None:
        np.testing.assert_allclose(a, b, atol=1e-8)


def test_monte_carlo_examples():
    assert monte_carlo_polar([-1 / 3] * 3, E, trials=1000)
    assert not monte_carlo_polar([1, 0, 0], E, trials=1000)
    assert monte_carlo_polar([0, 0, 0], E)


@pytest.mark.parametrize("seed", range(40))
def test_monte_carlo_never_contradicts_exact_test(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    g = random_pointed_cone(n, int(rng.integers(1, 8)), seed=seed)
    for w in rng.standard_normal((20, n)):
        if not monte_carlo_polar(w, g, trials=200, seed=seed):
            assert not polar_membership(w, g)
    cd = circumcentric_direction(g)
    assert monte_carlo_polar(cd.d, g, trials=500, seed=seed)


def test_finite_differences():
    disk = ConvexSystem([QuadraticComponent(2 * np.eye(2), [0, 0], -1)], 2)
    assert finite_diff_gradient_check(disk, [1, 0], h=1e-5) <= 1e-8
    affine = ConvexSystem([AffineComponent([1.5, -2.0, 0.5], 3.0)], 3)
    assert finite_diff_gradient_check(affine, [0.3, 10.0, -4.0]) <= 1e-10
    rng = np.random.default_rng(0)
    B = rng.standard_normal((4, 4))
    quad = ConvexSystem([QuadraticComponent(B @ B.T, rng.standard_normal(4), 1.0)], 4)
    assert finite_diff_gradient_check(quad, rng.standard_normal(4), h=1e-5) <= 1e-6


def test_finite_differences_catch_wrong_gradient():
    class Wrong:
        def value(self, x):
            return float(x @ x)

        def gradient(self, x):
            return x

    assert finite_diff_gradient_check(ConvexSystem([Wrong()], 2), [1.0, 1.0]) > 0.5


def test_generator_postconditions():
    S = random_equal_norm_set(3, 3, seed=5)
    assert np.all(np.abs(np.linalg.norm(S.points, axis=1) - 1) <= 1e-12)
    assert is_pointed(random_pointed_cone(2, 2, seed=5))[0]
    P, x = random_polyhedron(2, 4, seed=5)
    assert len(active_set_poly(P, x)) >= 1


def test_pointed_cone_budget():
    with pytest.raises(ResamplingError):
        random_pointed_cone(1, 2, seed=0, max_tries=0)


def _serialize(obj):
    return json.dumps(np.asarray(obj).tolist())


@pytest.mark.parametrize("seed", [0, 17, 2**63 + 5])
def test_determinism(seed):
    assert _serialize(random_point_set(4, 3, seed)) == _serialize(random_point_set(4, 3, seed))
    assert _serialize(random_equal_norm_set(4, 3, seed).points) == _serialize(random_equal_norm_set(4, 3, seed).points)
    assert _serialize(random_pointed_cone(4, 6, seed).generators) == _serialize(random_pointed_cone(4, 6, seed).generators)
    (P1, x1), (P2, x2) = random_polyhedron(3, 5, seed), random_polyhedron(3, 5, seed)
    assert _serialize(P1.A) + _serialize(P1.b) + _serialize(x1) == _serialize(P2.A) + _serialize(P2.b) + _serialize(x2)
    (C1, y1), (C2, y2) = random_convex_system(3, 4, seed), random_convex_system(3, 4, seed)
    assert _serialize(C1.values(y1 + 1)) == _serialize(C2.values(y2 + 1))
