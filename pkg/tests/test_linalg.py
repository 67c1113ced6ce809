import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from circumcone.errors import DimensionError
from circumcone.linalg import GramSystem, gram, project_onto_affine_hull, solve_psd_min_norm


def test_gram_standard_basis():
    # <e_j - e_1, e_i - e_1> = 1 + [i == j]
    sys = gram(np.eye(3))
    np.testing.assert_array_equal(sys.matrix, [[2, 1], [1, 2]])
    np.testing.assert_array_equal(sys.rhs, [1, 1])


def test_gram_duplicate_pair():
    sys = gram([[0.3, -1.2], [0.3, -1.2]])
    np.testing.assert_array_equal(sys.matrix, [[0]])
    np.testing.assert_array_equal(sys.rhs, [0])


def test_gram_two_points():
    sys = gram([[1, 0], [0, 1]])
    np.testing.assert_array_equal(sys.matrix, [[2]])
    np.testing.assert_array_equal(sys.rhs, [1])


def test_gram_is_exactly_symmetric():
    U = np.random.default_rng(0).standard_normal((7, 5)) * 1e3
    M = gram(U).matrix
    assert np.array_equal(M, M.T)


def test_gram_errors():
    with pytest.raises(DimensionError):
        gram([[1, 0]])
    with pytest.raises(DimensionError):
        gram([[1, 0], [1, 0, 0]])


@pytest.mark.parametrize(
    "matrix, rhs, alpha, residual",
    [
        ([[2, 1], [1, 2]], [1, 1], [1 / 3, 1 / 3], 0.0),
        ([[0]], [0], [0], 0.0),
        ([[0]], [1], [0], 1.0),
    ],
)
def test_solve_examples(matrix, rhs, alpha, residual):
    a, diag = solve_psd_min_norm(GramSystem(np.array(matrix, float), np.array(rhs, float)))
    np.testing.assert_allclose(a, alpha, atol=1e-15)
    assert diag.residual_norm == pytest.approx(residual, abs=1e-15)


def test_solve_rank_report():
    a, diag = solve_psd_min_norm(GramSystem(np.array([[1.0, 1.0], [1.0, 1.0]]), np.array([1.0, 1.0])))
    assert diag.rank == 1
    np.testing.assert_allclose(a, [0.5, 0.5], atol=1e-15)


@pytest.mark.parametrize("seed", range(20))
def test_solve_is_minimum_norm(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(2, 9))
    r = int(rng.integers(1, k))
    B = rng.standard_normal((k, r))
    M = B @ B.T
    rhs = rng.standard_normal(k)
    a, diag = solve_psd_min_norm(GramSystem(M, rhs, dim=k))
    # QR-based min-norm least squares as an independent reference
    ref = scipy.linalg.lstsq(M, rhs, lapack_driver="gelsy", cond=1e-10)[0]
    np.testing.assert_allclose(a, ref, atol=1e-8)
    assert diag.rank == r
    null = scipy.linalg.null_space(M)
    for col in null.T:
        for t in (1e-3, 1.0):
            assert np.linalg.norm(a + t * col) > np.linalg.norm(a)
            assert np.linalg.norm(M @ (a + t * col) - rhs) == pytest.approx(diag.residual_norm, abs=1e-8)


def test_projection_examples():
    np.testing.assert_allclose(project_onto_affine_hull([0, 0, 0], np.eye(3)), [1 / 3] * 3, atol=1e-15)
    np.testing.assert_allclose(project_onto_affine_hull([0, 0], [[1, 0]]), [1, 0])
    y = 0.2 * np.array([1, 0, 0]) + 0.5 * np.array([0, 1, 0]) + 0.3 * np.array([0, 0, 1])
    np.testing.assert_allclose(project_onto_affine_hull(y, np.eye(3)), y, atol=1e-15)


def test_projection_dimension_mismatch():
    with pytest.raises(DimensionError):
        project_onto_affine_hull([0, 0], np.eye(3))


point_sets = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        arrays(float, (n,), elements=st.floats(-10, 10)),
        st.integers(1, n + 2).flatmap(
            lambda p: arrays(float, (p, n), elements=st.floats(-10, 10))),
    )
)


@settings(max_examples=200, deadline=None)
@given(point_sets)
def test_projection_idempotent_and_orthogonal(data):
    y, S = data
    P = project_onto_affine_hull(y, S)
    np.testing.assert_allclose(project_onto_affine_hull(P, S), P, atol=1e-10 * (1 + np.abs(S).max()))
    tol = 1e-9 * (1 + y @ y) * (1 + np.abs(S).max()) ** 2
    for u in S:
        assert abs((u - P) @ (y - P)) <= tol
