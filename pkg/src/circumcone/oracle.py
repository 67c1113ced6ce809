"""Independent checks and random instance generators.

Nothing in here reuses the Gram-system path of :mod:`circumcone.circumcenter`;
the circumcenter oracle parametrizes the candidate barycentrically and hands
the stacked equations to a QR-based least-squares driver instead.

All generators take an explicit ``seed`` and draw from
``numpy.random.default_rng(seed)``, so equal seeds give bit-identical
instances.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

from .cone import ConeGenerators, is_pointed
from .errors import ResamplingError
from .feasible import ConvexSystem, Polyhedron, QuadraticComponent
from .circumcenter import EqualNormSet
from .linalg import DEFAULT_TOL, as_points, as_vector

MAX_TRIES = 1000


def brute_force_circumcenter(S, tol: float = DEFAULT_TOL) -> np.ndarray | None:
    """Circumcenter of the rows of ``S`` from the raw defining conditions, or ``None``.

    The unknown is written as ``d = beta @ S`` with ``sum(beta) == 1`` (so
    ``d`` is in the affine hull by construction), and equidistance is
    expanded into the linear equations
    ``2 <d, u_i - u_1> = ||u_i||^2 - ||u_1||^2``.
    """
    P = as_points(S)
    p = P.shape[0]
    if p == 1:
        return P[0].copy()
    sq = np.einsum("ij,ij->i", P, P)
    M = np.vstack([np.ones((1, p)), 2.0 * (P[1:] - P[0]) @ P.T])
    rhs = np.concatenate([[1.0], sq[1:] - sq[0]])
    beta = scipy.linalg.lstsq(M, rhs, lapack_driver="gelsy")[0]
    d = beta @ P
    dist = np.linalg.norm(P - d, axis=1)
    scale = 1.0 + np.sqrt(sq.max())
    if dist.max() - dist.min() > tol * scale:
        return None
    if abs(beta.sum() - 1.0) > tol * (1.0 + np.abs(beta).sum()):
        return None
    return d


def monte_carlo_polar(w, g, trials: int = 1000, seed=0, tol: float = DEFAULT_TOL) -> bool:
    """Sample ``z = sum lambda_i s_i`` with ``lambda_i ~ U[0, 1]`` and test ``<w, z> <= 0``.

    A ``False`` answer comes with a genuine witness and therefore implies
    ``w`` is not in the polar; ``True`` only means no witness was found.
    """
    w = as_vector(w, name="w")
    g = g if isinstance(g, ConeGenerators) else ConeGenerators.from_rows(g, dim=w.size)
    if len(g) == 0:
        return True
    rng = np.random.default_rng(seed)
    lam = rng.random((trials, len(g)))
    Z = lam @ g.generators
    lhs = Z @ w
    bound = tol * (1.0 + np.linalg.norm(w) * np.linalg.norm(Z, axis=1))
    return bool(np.all(lhs <= bound))


def finite_diff_gradient_check(C: ConvexSystem, x, h: float | None = None) -> float:
    """Largest absolute gap between each gradient oracle and central differences."""
    x = as_vector(x, C.dim, name="x")
    if h is None:
        h = 1e-5 * (1.0 + float(np.linalg.norm(x)))
    if not h > 0:
        raise ValueError("h must be positive")
    J = C.jacobian(x)
    E = np.eye(C.dim) * h
    fd = np.column_stack([(C.values(x + e) - C.values(x - e)) / (2 * h) for e in E])
    return float(np.abs(fd - J).max())


# -- random instances ---------------------------------------------------------


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_point_set(n: int, p: int, seed=0) -> np.ndarray:
    """``p`` standard normal points in ``R^n``."""
    return np.random.default_rng(seed).standard_normal((p, n))


def random_equal_norm_set(n: int, p: int, seed=0, eta: float = 1.0) -> EqualNormSet:
    """``p`` independent uniform points on the sphere of radius ``eta`` in ``R^n``."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    rng = np.random.default_rng(seed)
    U = eta * _unit(rng.standard_normal((p, n)))
    return EqualNormSet.from_points(U, eta=eta)


def random_pointed_cone(n: int, p: int, seed=0, max_tries: int = MAX_TRIES) -> ConeGenerators:
    """``p`` random unit generators spread around a random axis, resampled until pointed.

    The spread around the axis is itself random, so instances range from
    thin to nearly flat cones.
    """
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        axis = _unit(rng.standard_normal(n))
        spread = rng.uniform(0.1, 2.0)
        U = _unit(axis + spread * rng.standard_normal((p, n)))
        g = ConeGenerators.from_rows(U)
        if is_pointed(g)[0]:
            return g
    raise ResamplingError(f"no pointed cone after {max_tries} draws (n={n}, p={p})")


def random_polyhedron(n: int, m: int, seed=0, max_tries: int = MAX_TRIES) -> tuple[Polyhedron, np.ndarray]:
    """Random polyhedron with unit rows and a boundary point.

    The polyhedron contains the unit ball around a random anchor. The
    returned point activates between 1 and ``min(n, m)`` constraints, whose
    normals lean towards the direction from the anchor to the point; all
    other constraints have slack at least 0.1 there.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    rng = np.random.default_rng(seed)
    anchor = rng.standard_normal(n)
    w = _unit(rng.standard_normal(n))
    x = anchor + rng.uniform(1.5, 3.0) * w
    k = int(rng.integers(1, min(n, m) + 1))
    rows: list[np.ndarray] = []
    tries = 0
    while len(rows) < k:
        tries += 1
        if tries > max_tries:
            raise ResamplingError(f"could not place {k} active constraints")
        a = _unit(w + 0.6 * rng.standard_normal(n))
        # hyperplane through x must stay at distance >= 1 from the anchor
        if a @ (x - anchor) >= 1.0:
            rows.append(a)
    b = [a @ x for a in rows]
    for _ in range(m - k):
        a = _unit(rng.standard_normal(n))
        extra = rng.exponential(1.0)
        b.append(max(a @ anchor + 1.0, a @ x + 0.1) + extra)
        rows.append(a)
    order = rng.permutation(m)
    A = np.array(rows)[order]
    bb = np.array(b)[order]
    return Polyhedron(A, bb), x


def random_convex_system(n: int, m: int, seed=0, max_tries: int = MAX_TRIES) -> tuple[ConvexSystem, np.ndarray]:
    """Random convex quadratic system with a Slater point and a boundary point.

    Between 1 and ``min(n, m)`` components vanish at the returned point;
    every component is strictly negative at the attached Slater point.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    rng = np.random.default_rng(seed)
    x_hat = rng.standard_normal(n)
    delta = rng.uniform(0.5, 2.0) * _unit(rng.standard_normal(n))
    x_bar = x_hat - delta
    w = _unit(-delta)
    k = int(rng.integers(1, min(n, m) + 1))
    comps: list[QuadraticComponent] = []
    tries = 0
    while len(comps) < k:
        tries += 1
        if tries > max_tries:
            raise ResamplingError(f"could not place {k} active components")
        G = rng.uniform(0.5, 3.0) * _unit(w + 0.6 * rng.standard_normal(n))
        lin = G @ delta
        if lin > -0.05:
            continue
        B = rng.standard_normal((n, int(rng.integers(0, n + 1))))
        Q = B @ B.T
        curv = delta @ Q @ delta
        if curv > 0:
            # keep 0.5 * curv <= 0.5 * |lin| so the Slater point stays strictly inside
            Q *= rng.uniform(0.0, 1.0) * (-lin) / curv
        Q = 0.5 * (Q + Q.T)
        c = G - Q @ x_bar
        r = -(0.5 * x_bar @ Q @ x_bar + c @ x_bar)
        comps.append(QuadraticComponent(Q, c, r))
    for _ in range(m - k):
        B = rng.standard_normal((n, int(rng.integers(0, n + 1))))
        Q = 0.5 * (B @ B.T + (B @ B.T).T)
        c = rng.standard_normal(n)
        q = lambda y: 0.5 * y @ Q @ y + c @ y
        r = -max(q(x_bar), q(x_hat)) - 0.5 - rng.exponential(1.0)
        comps.append(QuadraticComponent(Q, c, r))
    order = rng.permutation(m)
    system = ConvexSystem([comps[i] for i in order], n, slater_point=x_hat)
    return system, x_bar
