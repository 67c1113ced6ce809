"""Packaged worked examples, replayed through the command-line layer.

Each case names a problem file under ``circumcone/problems``, the command
to run on it, and a predicate over the resulting report.
"""
from __future__ import annotations

from importlib import resources
from typing import Callable

import numpy as np

R = np.sqrt(2) / 2


def problem_path(name: str) -> str:
    return str(resources.files("circumcone") / "problems" / name)


def _close(a, b, atol) -> bool:
    return a is not None and np.allclose(np.asarray(a, dtype=float), b, rtol=0, atol=atol)


def _r3plus_direction(out) -> str | None:
    d = out["direction"]
    base = {tuple(np.round(row, 12)) for row in d["base"]}
    if base != {(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)}:
        return f"base {d['base']}"
    if not _close(d["d"], [-1 / 3] * 3, 1e-10):
        return f"d {d['d']}"
    if abs(d["radius"] - 1 / 3) > 1e-12:
        return f"radius {d['radius']}"
    if not out["interiorness"]["value"]:
        return "interiorness check failed"
    return None


def _r3plus_raw(out) -> str | None:
    return None if _close(out["center"], [0, 0, 0], 1e-10) else f"center {out['center']}"


def _three_unit(out) -> str | None:
    c = out["center"]
    return None if _close(c, [0, 0, R], 1e-10) else f"center {c}"


def _four_unit_center(out) -> str | None:
    return None if _close(out["center"], [0, 0, 0], 1e-8) else f"center {out['center']}"


def _four_unit_direction(out) -> str | None:
    if not _close(out["direction"]["d"], [0, 0, 0], 1e-8):
        return f"d {out['direction']['d']}"
    return None if out["pointed"]["value"] else "not pointed"


def _four_unit_check(out) -> str | None:
    if not out["pointed"]["value"]:
        return "not pointed"
    return None if out["li"]["value"] is False else "reported linearly independent"


def _collinear(out) -> str | None:
    return None if not out["exists"] and out["center"] is None else "center reported"


def _antipodal_center(out) -> str | None:
    return None if _close(out["center"], [0, 0], 1e-12) else f"center {out['center']}"


def _antipodal_check(out) -> str | None:
    if out["pointed"]["value"]:
        return "reported pointed"
    alpha = out["pointed"]["certificate"]["alpha"]
    return None if _close(alpha, [0.5, 0.5], 1e-9) else f"certificate {alpha}"


def _trivial(out) -> str | None:
    d = out["direction"]
    return None if d["radius"] == 0.0 and _close(d["d"], [0, 0, 0], 0) else f"d {d['d']}"


def _r3plus_polar(out) -> str | None:
    return None if out["polar"]["value"] and out["dual"]["value"] is False else str(out)


def _box(out) -> str | None:
    d = out["direction"]
    if out["active_set"] != [0, 1]:
        return f"active set {out['active_set']}"
    if not _close(d["d"], [0.5, 0.5], 1e-12) or abs(d["radius"] - 0.5) > 1e-12:
        return f"d {d['d']} radius {d['radius']}"
    if abs(out["step"]["max_step"] - 2.0) > 1e-12:
        return f"max_step {out['step']['max_step']}"
    if any(not p["max_step"] > 0 for p in out["perturbations"]):
        return "perturbed direction with zero step"
    return None


def _box_interior(out) -> str | None:
    return None if out["direction"]["radius"] == 0.0 and out["active_set"] == [] else str(out)


def _disk(out) -> str | None:
    d = out["direction"]
    if not _close(d["d"], [-1, 0], 1e-12) or abs(d["radius"] - 1) > 1e-12:
        return f"d {d['d']}"
    if len(out["feasible_prefix"]) != len(out["t_grid"]):
        return f"prefix {out['feasible_prefix']}"
    if any(len(p["feasible_prefix"]) == 0 for p in out["perturbations"]):
        return "perturbed direction with empty prefix"
    return None


CASES: list[tuple[str, list[str], Callable[[dict], str | None]]] = [
    ("orthant base and direction", ["direction", "r3plus.json"], _r3plus_direction),
    ("orthant raw generator circumcenter", ["circumcenter", "r3plus.json"], _r3plus_raw),
    ("orthant polar and dual of d",
     ["check", "r3plus.json", "--vector=-0.3333333333333333,-0.3333333333333333,-0.3333333333333333",
      "--polar", "--dual"], _r3plus_polar),
    ("three unit vectors", ["circumcenter", "three_unit.json"], _three_unit),
    ("four unit vectors circumcenter", ["circumcenter", "four_unit.json"], _four_unit_center),
    ("four unit vectors direction", ["direction", "four_unit.json"], _four_unit_direction),
    ("four unit vectors predicates", ["check", "four_unit.json", "--pointed", "--li"],
     _four_unit_check),
    ("collinear points", ["circumcenter", "collinear.json"], _collinear),
    ("antipodal pair circumcenter", ["circumcenter", "antipodal.json"], _antipodal_center),
    ("antipodal pair pointedness", ["check", "antipodal.json", "--pointed"], _antipodal_check),
    ("trivial cone", ["direction", "trivial_cone.json"], _trivial),
    ("unit square corner", ["feasible", "box.json", "--perturb", "20"], _box),
    ("unit square interior", ["feasible", "box.json", "--point", "0.5,0.5"], _box_interior),
    ("unit disk boundary", ["feasible", "disk.json", "--perturb", "20"], _disk),
]


def run_all(tol: float = 1e-9, seed: int = 0, trials: int = 100) -> list[tuple[str, bool, str]]:
    """Run every packaged case; returns ``(name, passed, detail)`` triples."""
    from .cli import run

    results = []
    for name, argv, verify in CASES:
        full = [argv[0], problem_path(argv[1]), *argv[2:],
                "--tol", repr(tol), "--seed", str(seed), "--trials", str(trials)]
        code, report = run(full)
        if code != 0 or report is None:
            results.append((name, False, f"exit code {code}"))
            continue
        problem = verify(report["outputs"])
        results.append((name, problem is None, problem or "ok"))
    return results
