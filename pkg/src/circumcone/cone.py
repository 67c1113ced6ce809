"""Finitely generated cones and their circumcentric directions.

A cone ``K = cone(S)`` is stored by its generators (rows of an array,
none of them zero); an empty generator list stands for ``K = {0}``. The
circumcentric direction of ``K`` is minus the circumcenter of a
unit-normalized conic base. It lies in the polar cone ``K°`` together with
the whole ball of radius ``||d||**2`` around it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circumcenter import Check, EqualNormSet, circumcenter_equal_norm
from .errors import DimensionError, InvariantError
from .linalg import DEFAULT_TOL, _frozen, as_points, as_vector, rank_threshold
from .solvers import min_norm_point, nnls

SOLVER_TOL = 1e-10


@dataclass(frozen=True)
class ConeGenerators:
    """Generators of ``K`` as rows of a ``(p, n)`` array; ``p == 0`` means ``K = {0}``."""

    generators: np.ndarray
    dim: int

    @classmethod
    def from_rows(cls, rows, dim: int | None = None, tol: float = DEFAULT_TOL) -> "ConeGenerators":
        G = as_points(rows, dim=dim, allow_empty=True, name="generators")
        norms = np.linalg.norm(G, axis=1)
        bad = np.flatnonzero(norms <= tol)
        if bad.size:
            raise InvariantError(f"generator {int(bad[0])} is (numerically) zero")
        return cls(G, G.shape[1])

    def __len__(self) -> int:
        return self.generators.shape[0]


def _as_cone(g, dim: int | None = None, tol: float = DEFAULT_TOL) -> ConeGenerators:
    if isinstance(g, ConeGenerators):
        if dim is not None and g.dim != dim:
            raise DimensionError(f"cone lives in R^{g.dim}, expected R^{dim}")
        return g
    return ConeGenerators.from_rows(g, dim=dim, tol=tol)


@dataclass(frozen=True)
class ConicBase:
    base: np.ndarray
    source: ConeGenerators


@dataclass(frozen=True)
class ConicCertificate:
    """Nonnegative weights ``lambdas`` and the residual ``||sum lambdas[i] s_i - x||``."""

    lambdas: np.ndarray
    residual: float


@dataclass(frozen=True)
class PointedCertificate:
    """Convex weights ``alpha`` minimizing ``||sum alpha_i u_i||`` and that minimum."""

    alpha: np.ndarray
    min_norm: float


@dataclass(frozen=True)
class CircumDirection:
    d: np.ndarray
    radius: float
    base_used: ConicBase

    @property
    def is_zero(self) -> bool:
        return self.radius == 0.0


def normalize_generators(g, tol: float = DEFAULT_TOL) -> ConeGenerators:
    """Scale generators to unit length and drop repeated directions.

    Two unit generators count as the same direction when their inner
    product is at least ``1 - tol``; the first one in input order is kept.
    """
    g = _as_cone(g, tol=tol)
    G = g.generators
    if len(g) == 0:
        return g
    U = G / np.linalg.norm(G, axis=1)[:, None]
    kept: list[int] = []
    for i in range(U.shape[0]):
        if all(U[i] @ U[j] < 1.0 - tol for j in kept):
            kept.append(i)
    return ConeGenerators(_frozen(U[kept]), g.dim)


def conic_membership(x, S, tol: float = DEFAULT_TOL) -> tuple[bool, ConicCertificate]:
    """Decide ``x in cone(S)`` by nonnegative least squares.

    Returns the decision and the certificate ``(lambdas, residual)``; ``x``
    is a member iff ``residual <= tol * (1 + ||x||)``.
    """
    S = as_points(S, allow_empty=True, dim=np.size(x), name="S")
    x = as_vector(x, S.shape[1], name="x")
    if S.shape[0] == 0:
        lam = np.zeros(0)
        res = float(np.linalg.norm(x))
    else:
        lam, res = nnls(S.T, x, maxiter=100 * S.shape[0], tol=SOLVER_TOL)
    member = res <= tol * (1.0 + float(np.linalg.norm(x)))
    return bool(member), ConicCertificate(_frozen(lam), float(res))


def conic_base(g, tol: float = DEFAULT_TOL) -> ConicBase:
    """Normalized generating set of ``cone(g)`` with redundant generators removed.

    Generators are scanned in input order; each one that is a conic
    combination of the other survivors is dropped. For pointed cones the
    result is the (unique) set of unit extreme rays. For cones containing
    lines minimal bases are not unique and the greedy pass returns a
    valid, deterministic generating set without further minimization.
    """
    g = _as_cone(g, tol=tol)
    U = normalize_generators(g, tol).generators
    keep = list(range(U.shape[0]))
    for i in range(U.shape[0]):
        others = [j for j in keep if j != i]
        if others and conic_membership(U[i], U[others], tol)[0]:
            keep.remove(i)
    return ConicBase(_frozen(U[keep].copy()), g)


def circumcentric_direction(g, tol: float = DEFAULT_TOL) -> CircumDirection:
    """Circumcentric direction ``d`` of ``cone(g)`` and its interiorness radius ``||d||**2``.

    ``d`` is minus the circumcenter of the unit conic base, i.e. minus the
    projection of the origin onto the affine hull of the base vectors. It
    is zero for ``K = {0}``.
    """
    g = _as_cone(g, tol=tol)
    base = conic_base(g, tol)
    if base.base.shape[0] == 0:
        return CircumDirection(_frozen(np.zeros(g.dim)), 0.0, base)
    c = circumcenter_equal_norm(EqualNormSet.from_points(base.base, eta=1.0, tol=tol))
    d = _frozen(-c)
    return CircumDirection(d, float(d @ d), base)


def _unit_rows(g: ConeGenerators) -> np.ndarray:
    G = g.generators
    return G / np.linalg.norm(G, axis=1)[:, None] if len(g) else G


def polar_membership(w, g, tol: float = DEFAULT_TOL) -> Check:
    """Decide ``w in K°``, i.e. ``<w, s> <= 0`` for every generator ``s``.

    Generators are compared after unit normalization, so the test is
    ``max_s <w, s/||s||> <= tol * (1 + ||w||)``. ``margin`` is how far the
    worst generator sits inside that bound.
    """
    w = as_vector(w, name="w")
    g = _as_cone(g, dim=w.size, tol=tol)
    bound = tol * (1.0 + float(np.linalg.norm(w)))
    if len(g) == 0:
        return Check(True, bound)
    worst = float((_unit_rows(g) @ w).max())
    margin = bound - worst
    return Check(margin >= 0, margin)


def dual_membership(w, g, tol: float = DEFAULT_TOL) -> Check:
    """Decide ``w in K* = -K°``."""
    return polar_membership(-as_vector(w, name="w"), g, tol)


def interiorness_check(cd: CircumDirection, g, trials: int = 100, seed=0,
                       shrink: float = 1 - 1e-6, tol: float = DEFAULT_TOL) -> Check:
    """Sample ``v`` on the sphere of radius ``shrink * ||d||**2`` and test ``d + v in K°``.

    The margin is the smallest polar margin over all samples; the
    certificate is the worst sampled ``v``. Vacuously true when the radius
    is zero.
    """
    g = _as_cone(g, dim=cd.d.size, tol=tol)
    if cd.radius == 0.0 or trials <= 0:
        return Check(True, np.inf)
    rng = np.random.default_rng(seed)
    V = rng.standard_normal((trials, cd.d.size))
    V *= (shrink * cd.radius) / np.linalg.norm(V, axis=1)[:, None]
    W = cd.d + V
    bounds = tol * (1.0 + np.linalg.norm(W, axis=1))
    if len(g) == 0:
        return Check(True, float(bounds.min()))
    margins = bounds - (W @ _unit_rows(g).T).max(axis=1)
    k = int(np.argmin(margins))
    return Check(bool(margins[k] >= 0), float(margins[k]), _frozen(V[k]))


def _simplex_min_norm(U: np.ndarray) -> PointedCertificate:
    x, alpha = min_norm_point(U, tol=SOLVER_TOL, maxiter=100 * U.shape[0])
    return PointedCertificate(_frozen(alpha), float(np.linalg.norm(x)))


def is_pointed(g, tol: float = DEFAULT_TOL) -> tuple[bool, PointedCertificate]:
    """Decide whether ``cone(g)`` contains no line.

    ``K`` is pointed iff the origin is not in the convex hull of its unit
    generators, so the test is ``min ||sum alpha_i u_i|| > tol`` over the
    unit simplex. When the answer is no, ``alpha`` is a nonnegative
    combination summing the generators to (numerically) zero. ``K = {0}``
    counts as pointed.
    """
    g = _as_cone(g, tol=tol)
    if len(g) == 0:
        return True, PointedCertificate(_frozen(np.zeros(0)), np.inf)
    cert = _simplex_min_norm(_unit_rows(g))
    return cert.min_norm > tol, cert


def positively_linearly_independent(S, tol: float = DEFAULT_TOL) -> Check:
    """True iff no nontrivial nonnegative combination of the rows of ``S`` vanishes.

    Same computation as :func:`is_pointed` but on the vectors as given,
    with the threshold scaled by the largest norm. Under this definition
    ``{v, -v}`` is *dependent*.
    """
    P = as_points(S)
    cert = _simplex_min_norm(P)
    scale = max(1.0, float(np.linalg.norm(P, axis=1).max()))
    margin = cert.min_norm - tol * scale
    return Check(margin > 0, margin, cert)


def linearly_independent(S) -> Check:
    """Numerical linear independence of the rows of ``S``.

    ``margin`` is the smallest singular value relative to the largest.
    """
    P = as_points(S)
    if P.shape[0] > P.shape[1]:
        return Check(False, 0.0)
    s = np.linalg.svd(P, compute_uv=False)
    if s[0] == 0.0:
        return Check(False, 0.0)
    rank = int((s > rank_threshold(s[0], P.shape)).sum())
    return Check(rank == P.shape[0], float(s[-1] / s[0]))
