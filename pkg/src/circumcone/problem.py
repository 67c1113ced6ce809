"""JSON problem files.

A problem file is one JSON object with a ``kind`` field:

``point_set``
    ``points`` (list of rows).
``cone``
    ``generators`` (list of rows, may be empty), ``dim`` (required when
    empty), optional ``vector``.
``polyhedron``
    ``A`` (rows), ``b``, optional ``point``.
``convex_system``
    ``dim``, ``components`` (each ``{"type": "affine", "c", "r"}`` or
    ``{"type": "quadratic", "Q", "c", "r"}``), optional ``point`` and
    ``slater_point``.

Every kind also accepts ``tol``, ``atol`` and a free-text ``description``.
Unknown fields are rejected unless ``allow_unknown`` is set.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .cone import ConeGenerators
from .errors import CircumconeError, DimensionError
from .feasible import AffineComponent, ConvexSystem, Polyhedron, QuadraticComponent
from .linalg import as_points, as_vector

COMMON_FIELDS = {"kind", "tol", "atol", "description"}
KIND_FIELDS = {
    "point_set": {"points"},
    "cone": {"generators", "dim", "vector"},
    "polyhedron": {"A", "b", "point"},
    "convex_system": {"dim", "components", "point", "slater_point"},
}
COMPONENT_FIELDS = {"affine": {"type", "c", "r"}, "quadratic": {"type", "Q", "c", "r"}}


class ProblemFileError(CircumconeError):
    """The problem file is malformed or fails schema validation."""


@dataclass
class Problem:
    kind: str
    data: dict[str, Any]
    tol: float | None = None
    atol: float | None = None


def _check_fields(obj: dict, allowed: set, where: str, allow_unknown: bool) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown and not allow_unknown:
        raise ProblemFileError(f"unknown field(s) in {where}: {', '.join(unknown)}")


def _finite_number(v, name: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise ProblemFileError(f"{name} must be a finite number")
    return float(v)


def _require(obj: dict, key: str, kind: str):
    if key not in obj:
        raise ProblemFileError(f"{kind} problem needs a '{key}' field")
    return obj[key]


def parse_problem(obj: dict, allow_unknown: bool = False) -> Problem:
    """Validate a decoded problem object and build the library objects it describes."""
    if not isinstance(obj, dict):
        raise ProblemFileError("problem file must hold a JSON object")
    kind = obj.get("kind")
    if kind not in KIND_FIELDS:
        raise ProblemFileError(f"kind must be one of {sorted(KIND_FIELDS)}, got {kind!r}")
    _check_fields(obj, COMMON_FIELDS | KIND_FIELDS[kind], f"{kind} problem", allow_unknown)
    tol = _finite_number(obj["tol"], "tol") if "tol" in obj else None
    atol = _finite_number(obj["atol"], "atol") if "atol" in obj else None
    try:
        data = _BUILDERS[kind](obj, allow_unknown)
    except ProblemFileError:
        raise
    except DimensionError as exc:
        raise ProblemFileError(str(exc)) from exc
    except CircumconeError:
        raise
    except (TypeError, ValueError) as exc:
        raise ProblemFileError(f"malformed {kind} payload: {exc}") from exc
    return Problem(kind, data, tol, atol)


def _point_set(obj, allow_unknown):
    return {"points": as_points(_require(obj, "points", "point_set"), name="points")}


def _cone(obj, allow_unknown):
    dim = obj.get("dim")
    if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int) or dim < 1):
        raise ProblemFileError("dim must be a positive integer")
    gens = ConeGenerators.from_rows(_require(obj, "generators", "cone"), dim=dim)
    out = {"cone": gens}
    if "vector" in obj:
        out["vector"] = as_vector(obj["vector"], gens.dim, name="vector")
    return out


def _polyhedron(obj, allow_unknown):
    P = Polyhedron(_require(obj, "A", "polyhedron"), _require(obj, "b", "polyhedron"))
    out = {"polyhedron": P}
    if "point" in obj:
        out["point"] = as_vector(obj["point"], P.dim, name="point")
    return out


def _component(c, dim: int, index: int, allow_unknown: bool):
    if not isinstance(c, dict):
        raise ProblemFileError(f"component {index} must be an object")
    ctype = c.get("type")
    if ctype not in COMPONENT_FIELDS:
        raise ProblemFileError(f"component {index}: type must be 'affine' or 'quadratic'")
    _check_fields(c, COMPONENT_FIELDS[ctype], f"component {index}", allow_unknown)
    cvec = as_vector(_require(c, "c", f"component {index}"), dim, name=f"component {index} c")
    r = _finite_number(c.get("r", 0.0), f"component {index} r")
    if ctype == "affine":
        return AffineComponent(cvec, r)
    return QuadraticComponent(_require(c, "Q", f"component {index}"), cvec, r)


def _convex_system(obj, allow_unknown):
    dim = _require(obj, "dim", "convex_system")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ProblemFileError("dim must be a positive integer")
    comps = _require(obj, "components", "convex_system")
    if not isinstance(comps, list) or not comps:
        raise ProblemFileError("components must be a non-empty list")
    built = [_component(c, dim, i, allow_unknown) for i, c in enumerate(comps)]
    slater = obj.get("slater_point")
    system = ConvexSystem(built, dim, slater_point=slater)
    out = {"system": system}
    if "point" in obj:
        out["point"] = as_vector(obj["point"], dim, name="point")
    return out


_BUILDERS = {
    "point_set": _point_set,
    "cone": _cone,
    "polyhedron": _polyhedron,
    "convex_system": _convex_system,
}


def load_problem(text: str, allow_unknown: bool = False) -> Problem:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"invalid JSON: {exc}") from exc
    return parse_problem(obj, allow_unknown)
