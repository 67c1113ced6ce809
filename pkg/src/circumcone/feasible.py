"""Inward directions at boundary points of convex regions.

Two kinds of region are supported:

* polyhedra ``{x : A x <= b}``, via :class:`Polyhedron`;
* smooth convex systems ``{x : g(x) <= 0}``, via :class:`ConvexSystem`
  with one value/gradient oracle per component.

At a feasible point the active constraint normals (rows of ``A`` or
gradients of ``g``) generate a cone ``K``; its circumcentric direction
``d`` points into the region and so does ``d + v`` for every
``||v|| <= ||d||**2`` (strictly smaller for the smooth case).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .cone import CircumDirection, ConeGenerators, circumcentric_direction
from .errors import DimensionError, InfeasiblePointError, InvariantError
from .linalg import DEFAULT_TOL, _frozen, as_points, as_vector

DEFAULT_ATOL = 1e-8


@dataclass(frozen=True)
class Polyhedron:
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = as_points(self.A, name="A")
        b = as_vector(self.b, A.shape[0], name="b")
        norms = np.linalg.norm(A, axis=1)
        if np.any(norms <= DEFAULT_TOL):
            raise InvariantError(f"row {int(np.argmin(norms))} of A is (numerically) zero")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return self.A.shape[1]

    def slack(self, x) -> np.ndarray:
        return self.b - self.A @ as_vector(x, self.dim, name="x")


@dataclass(frozen=True)
class ActiveSet:
    indices: tuple[int, ...]
    activity_tol: float

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class StepReport:
    direction: np.ndarray
    max_step: float
    blocking_index: int | None
    per_constraint_ratios: np.ndarray


def active_set_poly(P: Polyhedron, x, atol: float = DEFAULT_ATOL) -> ActiveSet:
    """Indices ``j`` with ``|<a_j, x> - b_j| <= atol * (1 + |b_j|)``.

    Raises :class:`InfeasiblePointError` if some ``<a_j, x> - b_j`` exceeds
    that bound.
    """
    r = -P.slack(x)
    bound = atol * (1.0 + np.abs(P.b))
    if np.any(r > bound):
        j = int(np.argmax(r - bound))
        raise InfeasiblePointError(f"point violates constraint {j} by {r[j]:.3e}")
    return ActiveSet(tuple(int(j) for j in np.flatnonzero(np.abs(r) <= bound)), atol)


def circum_direction_poly(P: Polyhedron, x, atol: float = DEFAULT_ATOL,
                          tol: float = DEFAULT_TOL) -> CircumDirection:
    """Circumcentric direction of the cone spanned by the active rows of ``A`` at ``x``."""
    J = active_set_poly(P, x, atol)
    gens = ConeGenerators.from_rows(P.A[list(J.indices)], dim=P.dim, tol=tol)
    return circumcentric_direction(gens, tol)


def max_feasible_step(P: Polyhedron, x, direction, tol: float = DEFAULT_TOL) -> StepReport:
    """Ratio test: the largest ``t`` with ``x + t * direction`` in the polyhedron.

    Only constraints with ``<a_j, direction> > tol * ||a_j||`` can block;
    their ratios are ``max(slack_j, 0) / <a_j, direction>``. Rows that
    cannot block get ratio ``inf``. A zero direction yields ``inf``.
    """
    x = as_vector(x, P.dim, name="x")
    direction = as_vector(direction, P.dim, name="direction")
    rate = P.A @ direction
    slack = np.maximum(P.slack(x), 0.0)
    ratios = np.full(P.A.shape[0], np.inf)
    blocks = rate > tol * np.linalg.norm(P.A, axis=1)
    ratios[blocks] = slack[blocks] / rate[blocks]
    if not blocks.any():
        return StepReport(direction, np.inf, None, _frozen(ratios))
    j = int(np.argmin(ratios))
    return StepReport(direction, float(ratios[j]), j, _frozen(ratios))


# -- smooth convex systems ----------------------------------------------------


@dataclass(frozen=True)
class AffineComponent:
    """``g(x) = c @ x + r``."""

    c: np.ndarray
    r: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "c", as_vector(self.c, name="c"))
        object.__setattr__(self, "r", float(self.r))

    def value(self, x) -> float:
        return float(self.c @ x + self.r)

    def gradient(self, x) -> np.ndarray:
        return self.c.copy()


@dataclass(frozen=True)
class QuadraticComponent:
    """``g(x) = 0.5 * x @ Q @ x + c @ x + r`` with ``Q`` symmetric PSD."""

    Q: np.ndarray
    c: np.ndarray
    r: float = 0.0

    def __post_init__(self):
        Q = np.array(self.Q, dtype=float)
        c = as_vector(self.c, name="c")
        if Q.shape != (c.size, c.size):
            raise DimensionError(f"Q has shape {Q.shape}, expected {(c.size, c.size)}")
        if not np.all(np.isfinite(Q)):
            raise DimensionError("Q has non-finite entries")
        scale = max(1.0, float(np.abs(Q).max()))
        if np.abs(Q - Q.T).max() > 1e-12 * scale:
            raise InvariantError("Q is not symmetric")
        if np.linalg.eigvalsh(Q).min() < -DEFAULT_TOL * scale:
            raise InvariantError("Q is not positive semidefinite")
        Q.setflags(write=False)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "r", float(self.r))

    def value(self, x) -> float:
        return float(0.5 * x @ self.Q @ x + self.c @ x + self.r)

    def gradient(self, x) -> np.ndarray:
        return self.Q @ x + self.c


@dataclass(frozen=True)
class FunctionComponent:
    """Component given by plain callables; they must be stateless."""

    value: Callable[[np.ndarray], float]
    gradient: Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class ConvexSystem:
    """Region ``{x : g_j(x) <= 0 for all j}`` with convex differentiable ``g_j``.

    ``slater_point``, when given, is checked pointwise
    (``g_j(slater_point) < -tol`` for every ``j``). Nothing is verified
    globally; without a Slater point the direction guarantees may fail.
    """

    components: Sequence
    dim: int
    slater_point: np.ndarray | None = None
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise DimensionError("convex system has no components")
        if self.slater_point is not None:
            xs = as_vector(self.slater_point, self.dim, name="slater_point")
            vals = self.values(xs)
            if np.any(vals >= -self.tol):
                j = int(np.argmax(vals))
                raise InvariantError(
                    f"slater_point is not strictly feasible: g_{j} = {vals[j]:.3e}")
            object.__setattr__(self, "slater_point", xs)

    @property
    def has_slater_point(self) -> bool:
        return self.slater_point is not None

    def values(self, x) -> np.ndarray:
        x = as_vector(x, self.dim, name="x")
        return np.array([c.value(x) for c in self.components], dtype=float)

    def jacobian(self, x) -> np.ndarray:
        x = as_vector(x, self.dim, name="x")
        return np.array([np.asarray(c.gradient(x), dtype=float).reshape(self.dim)
                         for c in self.components])


def active_set_convex(C: ConvexSystem, x, atol: float = DEFAULT_ATOL) -> ActiveSet:
    """Indices ``j`` with ``|g_j(x)| <= atol``; raises if some ``g_j(x) > atol``."""
    g = C.values(x)
    if np.any(g > atol):
        j = int(np.argmax(g))
        raise InfeasiblePointError(f"point violates component {j}: g = {g[j]:.3e}")
    return ActiveSet(tuple(int(j) for j in np.flatnonzero(np.abs(g) <= atol)), atol)


def circum_direction_convex(C: ConvexSystem, x, atol: float = DEFAULT_ATOL,
                            tol: float = DEFAULT_TOL) -> CircumDirection:
    """Circumcentric direction of the cone spanned by the active gradients at ``x``.

    A vanishing active gradient makes the normalization undefined and
    raises :class:`InvariantError`.
    """
    J = active_set_convex(C, x, atol)
    if not J.indices:
        return circumcentric_direction(ConeGenerators(_frozen(np.empty((0, C.dim))), C.dim))
    grads = C.jacobian(x)[list(J.indices)]
    norms = np.linalg.norm(grads, axis=1)
    if np.any(norms <= tol):
        j = J.indices[int(np.argmin(norms))]
        raise InvariantError(f"active component {j} has a vanishing gradient")
    return circumcentric_direction(ConeGenerators.from_rows(grads, dim=C.dim, tol=tol), tol)


@dataclass(frozen=True)
class DirectionValidation:
    """Result of evaluating ``g(x + t * direction)`` along a step grid.

    ``feasible_prefix`` holds the leading grid values that kept every
    component at or below ``tol``; ``max_values[k]`` is ``max_j g_j`` at
    ``t_grid[k]``.
    """

    t_grid: np.ndarray
    max_values: np.ndarray
    feasible_prefix: np.ndarray

    @property
    def ok(self) -> bool:
        return self.feasible_prefix.size > 0


def validate_direction_convex(C: ConvexSystem, x, direction, t_grid,
                              tol: float = DEFAULT_TOL) -> DirectionValidation:
    x = as_vector(x, C.dim, name="x")
    direction = as_vector(direction, C.dim, name="direction")
    t = np.asarray(t_grid, dtype=float).reshape(-1)
    if np.any(t <= 0) or np.any(np.diff(t) < 0):
        raise DimensionError("t_grid must be positive and sorted")
    maxg = np.array([C.values(x + ti * direction).max() for ti in t])
    bad = np.flatnonzero(maxg > tol)
    stop = int(bad[0]) if bad.size else t.size
    return DirectionValidation(_frozen(t), _frozen(maxg), _frozen(t[:stop].copy()))
