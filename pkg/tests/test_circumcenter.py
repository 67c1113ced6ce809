import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circumcone.circumcenter import (
    EqualNormSet,
    check_center_inner_products,
    circumcenter,
    circumcenter_equal_norm,
    perturbation_radius,
)
from circumcone.errors import InvariantError
from circumcone.oracle import brute_force_circumcenter, random_equal_norm_set

R = np.sqrt(2) / 2
THREE_UNIT = np.array([[0, R, R], [R, 0, R], [-0.5, 0.5, R]])
FOUR_UNIT = np.vstack([THREE_UNIT, [0, 0, 1]])


def test_standard_basis():
    res = circumcenter(np.eye(3))
    np.testing.assert_allclose(res.center, [1 / 3] * 3, atol=1e-12)
    # the anchor reconstruction reproduces the center
    np.testing.assert_allclose(np.eye(3)[0] + res.alphas @ (np.eye(3)[1:] - np.eye(3)[0]),
                               res.center, atol=1e-15)


def test_three_unit_vectors():
    np.testing.assert_allclose(circumcenter(THREE_UNIT).center, [0, 0, R], atol=1e-10)


def test_collinear_points_have_no_center():
    res = circumcenter([[0, 0], [1, 0], [2, 0]])
    assert not res.exists
    assert res.center is None
    assert res.system_residual > 1e-9


def test_antipodal_pair():
    v = np.array([0.6, 0.8])
    np.testing.assert_array_equal(circumcenter([v, -v]).center, [0, 0])


def test_short_circuits():
    u = np.array([1.5, -2.0, 0.25])
    np.testing.assert_array_equal(circumcenter([u]).center, u)
    w = np.array([0.0, 1.0, 1.0])
    np.testing.assert_array_equal(circumcenter([u, w]).center, 0.5 * (u + w))


def test_duplicates_are_collapsed():
    S = np.array([[1, 0, 0], [0, 1, 0], [1, 0, 0], [0, 0, 1], [0, 1, 0]], float)
    res = circumcenter(S)
    np.testing.assert_allclose(res.center, [1 / 3] * 3, atol=1e-12)
    assert res.alphas.shape == (4,)
    assert res.alphas[1] == 0 and res.alphas[3] == 0
    np.testing.assert_allclose(S[0] + res.alphas @ (S[1:] - S[0]), res.center, atol=1e-15)


def test_equal_norm_examples():
    np.testing.assert_allclose(circumcenter_equal_norm(np.eye(3)), [1 / 3] * 3, atol=1e-12)
    np.testing.assert_allclose(circumcenter_equal_norm(FOUR_UNIT), 0, atol=1e-8)
    u = np.array([0.6, 0.0, 0.8])
    np.testing.assert_allclose(circumcenter_equal_norm([u]), u)


def test_equal_norm_rejects_unequal_norms():
    with pytest.raises(InvariantError):
        circumcenter_equal_norm([[1, 0], [0, 2]])
    with pytest.raises(InvariantError):
        EqualNormSet.from_points(np.eye(2), eta=2.0)


@pytest.mark.parametrize(
    "c, eta, expected",
    [([1 / 3] * 3, 1.0, 1 / 3), ([0, 0, 0], 1.0, 0.0), ([0, 0, R], 1.0, 0.5)],
)
def test_perturbation_radius(c, eta, expected):
    assert perturbation_radius(c, eta) == pytest.approx(expected, abs=1e-15)


def test_perturbation_radius_needs_positive_eta():
    with pytest.raises(InvariantError):
        perturbation_radius([1, 0], 0.0)


def test_inner_product_identity_examples():
    assert check_center_inner_products(np.eye(3), [1 / 3] * 3)
    v = np.array([0.6, 0.8])
    assert check_center_inner_products([v, -v], [0, 0])
    assert check_center_inner_products([v], v)
    assert not check_center_inner_products(np.eye(3), [0.5, 0.5, 0])


def _random_set(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 11))
    p = int(rng.integers(2, n + 2))
    return random_equal_norm_set(n, p, seed=seed)


@pytest.mark.parametrize("seed", range(100))
def test_equal_norm_properties(seed):
    S = _random_set(seed)
    c = circumcenter_equal_norm(S)
    # both solution paths and the brute-force oracle agree
    np.testing.assert_allclose(c, brute_force_circumcenter(S.points), atol=1e-8)
    np.testing.assert_allclose(c, circumcenter(S.points).center, atol=1e-8)
    dist = np.linalg.norm(S.points - c, axis=1)
    assert dist.max() - dist.min() <= 1e-9 * (1 + S.eta)
    assert check_center_inner_products(S, c)
    rad = perturbation_radius(c, S.eta)
    rng = np.random.default_rng(seed + 10_000)
    V = rng.standard_normal((100, S.dim))
    V *= (1 - 1e-6) * rad / np.linalg.norm(V, axis=1)[:, None]
    assert ((c + V) @ S.points.T).min() >= -1e-9


@pytest.mark.parametrize("seed", range(30))
def test_permutation_invariance(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 6))
    S = rng.standard_normal((int(rng.integers(2, n + 2)), n))
    base = circumcenter(S).center
    for perm in itertools.islice(itertools.permutations(range(len(S))), 12):
        np.testing.assert_allclose(circumcenter(S[list(perm)]).center, base, atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_center_lies_in_affine_hull_and_is_equidistant(n, seed):
    rng = np.random.default_rng(seed)
    S = rng.standard_normal((int(rng.integers(1, n + 2)), n))
    res = circumcenter(S)
    assert res.exists
    dist = np.linalg.norm(S - res.center, axis=1)
    assert dist.max() - dist.min() <= 1e-9 * (1 + np.linalg.norm(S, axis=1).max())
