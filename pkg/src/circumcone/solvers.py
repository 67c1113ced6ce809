"""Small dense solvers for the conic predicates.

``nnls`` is the Lawson-Hanson active-set method; ``min_norm_point`` is
Wolfe's method for the point of smallest norm in the convex hull of a
finite set. Both are written for desk-scale problems (a few hundred
unknowns at most) and carry an iteration cap of ``100 * p``.
"""
from __future__ import annotations

import warnings

import numpy as np

_EPS = np.finfo(float).eps


def nnls(A, b, maxiter: int | None = None, tol: float = 1e-10) -> tuple[np.ndarray, float]:
    """Solve ``min ||A x - b||`` subject to ``x >= 0``.

    Parameters
    ----------
    A : array_like, shape (m, n)
    b : array_like, shape (m,)
    maxiter : int, optional
        Cap on inner least-squares solves (default ``100 * n``).
    tol : float
        Dual feasibility tolerance, relative to ``||A|| * ||b||``.

    Returns
    -------
    x : ndarray, shape (n,)
    rnorm : float
        ``||A x - b||`` at the returned ``x``.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    if maxiter is None:
        maxiter = 100 * max(n, 1)
    x = np.zeros(n)
    passive = np.zeros(n, dtype=bool)
    # columns whose multiplier turned out non-positive right after entering
    blocked = np.zeros(n, dtype=bool)
    wtol = tol * max(1.0, np.linalg.norm(A, 2) * np.linalg.norm(b))
    it = 0
    while True:
        w = A.T @ (b - A @ x)
        cand = ~passive & ~blocked
        if not cand.any() or w[cand].max() <= wtol:
            break
        j = int(np.flatnonzero(cand)[np.argmax(w[cand])])
        passive[j] = True
        first = True
        while True:
            it += 1
            if it > maxiter:
                warnings.warn("nnls: iteration cap reached", RuntimeWarning, stacklevel=2)
                return x, float(np.linalg.norm(A @ x - b))
            z = np.zeros(n)
            z[passive] = np.linalg.lstsq(A[:, passive], b, rcond=None)[0]
            if first and z[j] <= 0:
                # rounding made the entering column useless; park it until x moves
                passive[j] = False
                blocked[j] = True
                break
            first = False
            if np.all(z[passive] > 0):
                x = z
                blocked[:] = False
                break
            neg = passive & (z <= 0)
            step = np.min(x[neg] / (x[neg] - z[neg]))
            x = x + step * (z - x)
            passive &= x > _EPS * max(1.0, np.abs(x).max())
            x[~passive] = 0.0
    return x, float(np.linalg.norm(A @ x - b))


def _affine_minimizer(Y: np.ndarray) -> np.ndarray:
    # weights v with sum(v) = 1 minimizing ||v @ Y||, via the KKT system
    k = Y.shape[0]
    K = np.zeros((k + 1, k + 1))
    K[:k, :k] = Y @ Y.T
    K[:k, k] = 1.0
    K[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    v = np.linalg.lstsq(K, rhs, rcond=None)[0][:k]
    return v / v.sum()


def min_norm_point(U, tol: float = 1e-10, maxiter: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Point of minimum norm in the convex hull of the rows of ``U`` (Wolfe's method).

    Returns the point ``x`` and convex weights ``alpha`` (``alpha >= 0``,
    ``alpha.sum() == 1``) with ``x == alpha @ U``. Iteration stops when
    Wolfe's optimality gap ``||x||^2 - min_j <x, u_j>`` drops below
    ``tol * ||x||^2``; the gap is taken relative to ``||x||^2`` rather than
    to the point norms so that an origin inside the hull is always driven
    down to rounding level.
    """
    U = np.asarray(U, dtype=float)
    p = U.shape[0]
    if p == 0:
        raise ValueError("min_norm_point needs at least one point")
    if maxiter is None:
        maxiter = 100 * p
    sq = np.einsum("ij,ij->i", U, U)
    scale = max(sq.max(), np.finfo(float).tiny)
    support = [int(np.argmin(sq))]
    w = np.ones(1)
    x = U[support[0]].copy()
    it = 0
    while it < maxiter:
        it += 1
        xx = x @ x
        if xx <= (_EPS ** 2) * scale:
            break
        dots = U @ x
        j = int(np.argmin(dots))
        if xx - dots[j] <= tol * xx or j in support:
            break
        support.append(j)
        w = np.append(w, 0.0)
        while it < maxiter:
            it += 1
            v = _affine_minimizer(U[support])
            if np.all(v > 0):
                w = v
                break
            dec = (v <= 0) & (w > v)
            step = np.min(w[dec] / (w[dec] - v[dec])) if dec.any() else 1.0
            w = w + min(max(step, 0.0), 1.0) * (v - w)
            keep = w > _EPS
            if not keep.any():
                keep[np.argmax(w)] = True
            support = [s for s, k in zip(support, keep) if k]
            w = w[keep] / w[keep].sum()
        x = w @ U[support]
    alpha = np.zeros(p)
    alpha[support] = w
    return x, alpha
