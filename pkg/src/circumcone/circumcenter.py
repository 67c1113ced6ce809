"""Circumcenters of finite point sets.

The circumcenter of ``S = {u1, ..., up}`` is the point of ``aff(S)`` that
is equidistant from every ``ui``. It need not exist (three distinct
collinear points have none) but is unique when it does. When all points
have the same norm it always exists and equals the projection of the
origin onto ``aff(S)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvariantError
from .linalg import (
    DEFAULT_TOL,
    SolveDiagnostics,
    _frozen,
    as_points,
    as_vector,
    gram,
    project_onto_affine_hull,
    solve_psd_min_norm,
)


@dataclass(frozen=True)
class EqualNormSet:
    """Point set whose members all have (numerically) the same norm ``eta``."""

    points: np.ndarray
    eta: float

    @classmethod
    def from_points(cls, S, eta: float | None = None, tol: float = DEFAULT_TOL) -> "EqualNormSet":
        P = as_points(S)
        norms = np.linalg.norm(P, axis=1)
        if eta is None:
            eta = float(norms.mean())
        if eta < 0:
            raise InvariantError("eta must be nonnegative")
        dev = np.abs(norms - eta).max()
        if dev > tol * (1 + eta):
            raise InvariantError(
                f"points do not share a common norm: max |norm - {eta:g}| = {dev:.3e}")
        return cls(P, float(eta))

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class CircumcenterResult:
    center: np.ndarray | None
    alphas: np.ndarray
    equidistance_spread: float
    system_residual: float
    diagnostics: SolveDiagnostics | None = None

    @property
    def exists(self) -> bool:
        return self.center is not None


def _collapse_duplicates(P: np.ndarray, tol: float) -> list[int]:
    # first occurrence wins
    scale = 1.0 + np.linalg.norm(P, axis=1).max()
    kept: list[int] = []
    for i in range(P.shape[0]):
        if all(np.linalg.norm(P[i] - P[j]) > tol * scale for j in kept):
            kept.append(i)
    return kept


def _spread(center: np.ndarray, P: np.ndarray) -> float:
    dist = np.linalg.norm(P - center, axis=1)
    return float(dist.max() - dist.min())


def circumcenter(S, tol: float = DEFAULT_TOL) -> CircumcenterResult:
    """Circumcenter of the rows of ``S``, or an absent center if none exists.

    Parameters
    ----------
    S : array_like, shape (p, n)
        Points, one per row. The first row is the anchor ``u1``.
    tol : float
        Relative tolerance for the existence test.

    Returns
    -------
    CircumcenterResult
        ``center`` is ``None`` when the Gram system is inconsistent or the
        reconstructed candidate is not equidistant from every point.
        ``alphas`` always has length ``p - 1`` and reproduces the candidate
        as ``u1 + sum(alphas[j] * (u[j+1] - u1))``; points collapsed as
        duplicates get a zero coefficient.

    Notes
    -----
    Non-existence is a value, never an exception.
    """
    P = as_points(S)
    p = P.shape[0]
    alphas = np.zeros(p - 1)
    kept = _collapse_duplicates(P, tol)
    Q = P[kept]
    diag = None
    if len(kept) == 1:
        candidate = P[0].copy()
        residual = 0.0
    elif len(kept) == 2:
        alphas[kept[1] - 1] = 0.5
        candidate = 0.5 * (Q[0] + Q[1])
        residual = 0.0
    else:
        system = gram(Q)
        a, diag = solve_psd_min_norm(system)
        alphas[np.asarray(kept[1:]) - 1] = a
        candidate = Q[0] + a @ (Q[1:] - Q[0])
        residual = diag.residual_norm
        rhs_norm = float(np.linalg.norm(system.rhs))
    spread = _spread(candidate, P)
    scale = 1.0 + np.linalg.norm(P, axis=1).max()
    ok = spread <= tol * scale
    if len(kept) > 2:
        ok = ok and residual <= tol * (1.0 + rhs_norm)
    return CircumcenterResult(
        center=_frozen(candidate) if ok else None,
        alphas=_frozen(alphas),
        equidistance_spread=spread,
        system_residual=float(residual),
        diagnostics=diag,
    )


def circumcenter_equal_norm(S, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Circumcenter of an equal-norm set, computed as the projection of 0 onto aff(S).

    ``S`` may be an :class:`EqualNormSet` or anything :meth:`EqualNormSet.from_points`
    accepts; an :class:`InvariantError` is raised if the norms differ.
    """
    if not isinstance(S, EqualNormSet):
        S = EqualNormSet.from_points(S, tol=tol)
    return _frozen(project_onto_affine_hull(np.zeros(S.dim), S.points))


def perturbation_radius(c, eta: float) -> float:
    """Largest ``||v||`` keeping ``<c + v, u> >= 0`` for every point ``u`` of norm ``eta``."""
    if not eta > 0:
        raise InvariantError(f"eta must be positive, got {eta}")
    c = as_vector(c, name="c")
    return float(c @ c) / eta


@dataclass(frozen=True)
class Check:
    """Outcome of a numerical predicate.

    ``margin`` is positive on the passing side and has the units of the
    quantity being compared; ``certificate`` carries whatever witness the
    predicate produced. Truthiness follows ``ok``.
    """

    ok: bool
    margin: float
    certificate: object = None

    def __bool__(self) -> bool:
        return bool(self.ok)


def check_center_inner_products(S, c, tol: float = DEFAULT_TOL) -> Check:
    """Check ``<c, u> == ||c||**2`` for every point ``u`` of ``S``."""
    P = S.points if isinstance(S, EqualNormSet) else as_points(S)
    c = as_vector(c, P.shape[1], name="c")
    cc = float(c @ c)
    worst = float(np.abs(P @ c - cc).max())
    margin = tol * (1.0 + cc) - worst
    return Check(margin >= 0, margin)

