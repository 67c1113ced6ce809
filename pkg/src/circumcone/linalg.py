"""Rank-aware dense linear algebra shared by the rest of the package.

Everything here works on plain float64 arrays. Point sets are stored
row-wise, i.e. an array of shape ``(p, n)`` holds ``p`` points of
``R^n``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

DEFAULT_TOL = 1e-9

_EPS = np.finfo(float).eps


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_vector(x, dim: int | None = None, name: str = "vector") -> np.ndarray:
    """Return ``x`` as a finite 1-D float array (read-only copy)."""
    v = np.array(x, dtype=float)
    if v.ndim == 0:
        v = v.reshape(1)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-D array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DimensionError(f"{name} has non-finite entries")
    if dim is not None and v.size != dim:
        raise DimensionError(f"{name} has dimension {v.size}, expected {dim}")
    return _frozen(v)


def as_points(S, dim: int | None = None, allow_empty: bool = False,
              name: str = "point set") -> np.ndarray:
    """Return ``S`` as a finite ``(p, n)`` float array (read-only copy)."""
    if isinstance(S, np.ndarray):
        P = np.array(S, dtype=float)
    else:
        rows = list(S)
        if not rows:
            if not allow_empty:
                raise DimensionError(f"{name} is empty")
            if dim is None:
                raise DimensionError(f"empty {name} needs an explicit dimension")
            return _frozen(np.empty((0, dim)))
        try:
            P = np.array([np.asarray(r, dtype=float) for r in rows])
        except ValueError as exc:
            raise DimensionError(f"{name} rows have different lengths") from exc
    if P.ndim == 1 and P.size and dim is not None and P.size == dim:
        P = P.reshape(1, -1)
    if P.ndim != 2:
        raise DimensionError(f"{name} must be 2-D (points as rows), got shape {P.shape}")
    if P.shape[0] == 0 and not allow_empty:
        raise DimensionError(f"{name} is empty")
    if P.shape[1] == 0:
        raise DimensionError(f"{name} has zero-dimensional points")
    if dim is not None and P.shape[1] != dim:
        raise DimensionError(f"{name} has dimension {P.shape[1]}, expected {dim}")
    if not np.all(np.isfinite(P)):
        raise DimensionError(f"{name} has non-finite entries")
    return _frozen(P)


def rank_threshold(sigma_max: float, shape: tuple[int, ...]) -> float:
    """Singular values at or below this value count as zero."""
    return max(shape) * _EPS * sigma_max


@dataclass(frozen=True)
class GramSystem:
    """Gram system of the differences ``u[j] - u[anchor]``.

    ``matrix[i, j] = <u[j+1] - u[0], u[i+1] - u[0]>`` and
    ``rhs[i] = 0.5 * ||u[i+1] - u[0]||**2`` (after moving the anchor first).
    """

    matrix: np.ndarray
    rhs: np.ndarray
    basepoint_index: int = 0
    dim: int = 0


@dataclass(frozen=True)
class SolveDiagnostics:
    rank: int
    residual_norm: float
    singular_value_threshold: float


def gram(U, basepoint_index: int = 0) -> GramSystem:
    """Assemble the Gram system for the point set ``U`` (rows are points).

    Raises
    ------
    DimensionError
        If fewer than two points are given or the rows differ in length.
    """
    P = as_points(U)
    p, n = P.shape
    if p < 2:
        raise DimensionError("gram needs at least two points")
    if not 0 <= basepoint_index < p:
        raise DimensionError(f"basepoint_index {basepoint_index} out of range")
    order = [basepoint_index] + [i for i in range(p) if i != basepoint_index]
    D = P[order[1:]] - P[order[0]]
    M = D @ D.T
    # symmetrize exactly; BLAS may round the two triangles differently
    M = np.triu(M) + np.triu(M, 1).T
    rhs = 0.5 * np.einsum("ij,ij->i", D, D)
    return GramSystem(_frozen(M), _frozen(rhs), basepoint_index, n)


def solve_psd_min_norm(sys: GramSystem) -> tuple[np.ndarray, SolveDiagnostics]:
    """Minimum-norm least-squares solution of a symmetric PSD system.

    The solve goes through a full SVD; singular values at or below
    ``max(p, n) * eps * sigma_max`` are dropped. Inconsistent systems are
    not an error: the residual ``||matrix @ alpha - rhs||`` is reported and
    callers decide what to make of it.
    """
    M = np.asarray(sys.matrix, dtype=float)
    rhs = np.asarray(sys.rhs, dtype=float)
    k = M.shape[0]
    if k == 0:
        return np.zeros(0), SolveDiagnostics(0, 0.0, 0.0)
    U, s, Vt = np.linalg.svd(M)
    thresh = rank_threshold(s[0], (k + 1, max(sys.dim, k)))
    keep = s > thresh
    coef = (U[:, keep].T @ rhs) / s[keep]
    alpha = Vt[keep].T @ coef
    residual = float(np.linalg.norm(M @ alpha - rhs))
    return alpha, SolveDiagnostics(int(keep.sum()), residual, float(thresh))


def affine_basis(S) -> tuple[np.ndarray, np.ndarray]:
    """Anchor point and orthonormal basis (columns) of the direction space of aff(S)."""
    P = as_points(S)
    anchor = P[0]
    D = (P[1:] - anchor).T
    if D.shape[1] == 0:
        return anchor, np.zeros((P.shape[1], 0))
    Q, s, _ = np.linalg.svd(D, full_matrices=False)
    if s[0] == 0.0:
        return anchor, np.zeros((P.shape[1], 0))
    keep = s > rank_threshold(s[0], P.shape)
    return anchor, Q[:, keep]


def project_onto_affine_hull(y, S) -> np.ndarray:
    """Orthogonal projection of ``y`` onto the affine hull of the rows of ``S``.

    Uses an orthonormal basis of ``span{u - u[0]}`` taken from an SVD of the
    difference matrix, so it never forms the Gram matrix.

    >>> project_onto_affine_hull([0, 0, 0], np.eye(3)).round(12)
    array([0.33333333, 0.33333333, 0.33333333])
    """
    P = as_points(S)
    y = as_vector(y, P.shape[1], name="y")
    anchor, Q = affine_basis(P)
    return anchor + Q @ (Q.T @ (y - anchor))
