"""Command-line front end.

    circumcone circumcenter PROBLEM.json
    circumcone direction PROBLEM.json
    circumcone check PROBLEM.json --vector=-1,0,0 --polar --pointed
    circumcone feasible PROBLEM.json --point 0,0 --perturb 5 --seed 1
    circumcone regression

``PROBLEM.json`` may be ``-`` (the default) to read standard input. Every
command writes one JSON report to standard output; diagnostics go to
standard error. Floats are written in shortest round-trip form, so
re-reading a report gives back the exact same numbers.

Exit codes: 0 success, 2 unreadable or invalid problem, 3 infeasible
point, 4 invariant violation (including a failed regression case).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any

import numpy as np

from . import __version__
from .circumcenter import (
    Check,
    EqualNormSet,
    check_center_inner_products,
    circumcenter,
    circumcenter_equal_norm,
    perturbation_radius,
)
from .cone import (
    circumcentric_direction,
    dual_membership,
    interiorness_check,
    is_pointed,
    linearly_independent,
    polar_membership,
    positively_linearly_independent,
)
from .errors import InfeasiblePointError, InvariantError
from .feasible import (
    DEFAULT_ATOL,
    active_set_convex,
    active_set_poly,
    circum_direction_convex,
    circum_direction_poly,
    max_feasible_step,
    validate_direction_convex,
)
from .linalg import DEFAULT_TOL
from .oracle import finite_diff_gradient_check
from .problem import Problem, ProblemFileError, load_problem

log = logging.getLogger("circumcone")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_INVARIANT = 4

SHRINK = 1 - 1e-6
DEFAULT_T_GRID = tuple(10.0 ** k for k in range(-6, 1))


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps_report(report: dict) -> str:
    return json.dumps(to_jsonable(report), indent=2) + "\n"


def _check(c: Check, **extra) -> dict:
    out = {"value": bool(c.ok), "margin": float(c.margin)}
    out.update(extra)
    return out


def _parse_vector(text: str) -> list[float]:
    text = text.strip()
    if text.startswith("["):
        vals = json.loads(text)
    else:
        vals = [float(t) for t in text.split(",") if t.strip()]
    return [float(v) for v in vals]


def _direction_block(cd) -> dict:
    return {
        "d": cd.d,
        "radius": cd.radius,
        "base": cd.base_used.base,
        "norm": float(np.linalg.norm(cd.d)),
    }


# -- commands -----------------------------------------------------------------


def cmd_circumcenter(problem: Problem, args, tol: float) -> dict:
    if problem.kind == "point_set":
        S = problem.data["points"]
    elif problem.kind == "cone":
        S = problem.data["cone"].generators
    else:
        raise ProblemFileError("circumcenter needs a point_set or cone problem")
    if S.shape[0] == 0:
        raise ProblemFileError("circumcenter needs at least one point")
    res = circumcenter(S, tol)
    out: dict[str, Any] = {
        "exists": res.exists,
        "center": res.center,
        "alphas": res.alphas,
        "equidistance_spread": res.equidistance_spread,
        "system_residual": res.system_residual,
        "rank": None if res.diagnostics is None else res.diagnostics.rank,
    }
    try:
        ens = EqualNormSet.from_points(S, tol=tol)
    except InvariantError:
        out["equal_norm"] = None
    else:
        c = circumcenter_equal_norm(ens)
        block = {
            "eta": ens.eta,
            "center": c,
            "inner_products": _check(check_center_inner_products(ens, c, tol)),
        }
        if ens.eta > 0:
            block["perturbation_radius"] = perturbation_radius(c, ens.eta)
        out["equal_norm"] = block
    return out


def _require_cone(problem: Problem, cmd: str):
    if problem.kind != "cone":
        raise ProblemFileError(f"{cmd} needs a cone problem")
    return problem.data["cone"]


def cmd_direction(problem: Problem, args, tol: float) -> dict:
    g = _require_cone(problem, "direction")
    cd = circumcentric_direction(g, tol)
    pointed, cert = is_pointed(g, tol)
    inter = interiorness_check(cd, g, args.trials, args.seed, SHRINK, tol)
    return {
        "direction": _direction_block(cd),
        "polar_membership": _check(polar_membership(cd.d, g, tol)),
        "interiorness": _check(inter, trials=args.trials, shrink=SHRINK,
                               worst_v=inter.certificate),
        "pointed": {"value": pointed, "margin": cert.min_norm - tol,
                    "certificate": {"alpha": cert.alpha, "min_norm": cert.min_norm}},
    }


def cmd_check(problem: Problem, args, tol: float) -> dict:
    g = _require_cone(problem, "check")
    w = None
    if args.vector is not None:
        w = np.asarray(_parse_vector(args.vector))
    elif "vector" in problem.data:
        w = problem.data["vector"]
    wanted = [k for k in ("polar", "dual", "pointed", "pli", "li") if getattr(args, k)]
    if not wanted:
        wanted = (["polar", "dual"] if w is not None else []) + ["pointed", "pli", "li"]
    if ("polar" in wanted or "dual" in wanted) and w is None:
        raise ProblemFileError("--polar/--dual need --vector or a 'vector' field")
    if w is not None and w.size != g.dim:
        raise ProblemFileError(f"vector has dimension {w.size}, cone lives in R^{g.dim}")
    out: dict[str, Any] = {}
    if w is not None:
        out["vector"] = w
    for key in wanted:
        if key == "polar":
            out["polar"] = _check(polar_membership(w, g, tol))
        elif key == "dual":
            out["dual"] = _check(dual_membership(w, g, tol))
        elif key == "pointed":
            ok, cert = is_pointed(g, tol)
            out["pointed"] = {"value": ok, "margin": cert.min_norm - tol,
                              "certificate": {"alpha": cert.alpha, "min_norm": cert.min_norm}}
        elif len(g) == 0:
            out[key] = None
        elif key == "pli":
            c = positively_linearly_independent(g.generators, tol)
            out["pli"] = _check(c, certificate={"alpha": c.certificate.alpha,
                                                "min_norm": c.certificate.min_norm})
        else:
            out["li"] = _check(linearly_independent(g.generators))
    return out


def _sample_perturbations(radius: float, dim: int, k: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    V = rng.standard_normal((k, dim))
    if radius == 0.0:
        return np.zeros((k, dim))
    return V * (SHRINK * radius / np.linalg.norm(V, axis=1)[:, None])


def _step_block(rep) -> dict:
    return {"max_step": rep.max_step, "blocking_index": rep.blocking_index}


def cmd_feasible(problem: Problem, args, tol: float, atol: float) -> dict:
    if problem.kind not in ("polyhedron", "convex_system"):
        raise ProblemFileError("feasible needs a polyhedron or convex_system problem")
    if args.point is not None:
        x = np.asarray(_parse_vector(args.point))
    elif "point" in problem.data:
        x = problem.data["point"]
    else:
        raise ProblemFileError("feasible needs --point or a 'point' field")
    out: dict[str, Any] = {"point": x}
    if problem.kind == "polyhedron":
        P = problem.data["polyhedron"]
        if x.size != P.dim:
            raise ProblemFileError(f"point has dimension {x.size}, expected {P.dim}")
        J = active_set_poly(P, x, atol)
        cd = circum_direction_poly(P, x, atol, tol)
        rep = max_feasible_step(P, x, cd.d, tol)
        out.update(active_set=list(J.indices), direction=_direction_block(cd),
                   step=_step_block(rep) | {"ratios": rep.per_constraint_ratios})
        perturbed = []
        for v in _sample_perturbations(cd.radius, P.dim, args.perturb, args.seed):
            r = max_feasible_step(P, x, cd.d + v, tol)
            perturbed.append({"v": v} | _step_block(r))
        out["perturbations"] = perturbed
        return out

    C = problem.data["system"]
    if x.size != C.dim:
        raise ProblemFileError(f"point has dimension {x.size}, expected {C.dim}")
    t_grid = _parse_vector(args.t_grid) if args.t_grid else list(DEFAULT_T_GRID)
    J = active_set_convex(C, x, atol)
    cd = circum_direction_convex(C, x, atol, tol)
    val = validate_direction_convex(C, x, cd.d, t_grid, tol)
    warnings = []
    if not C.has_slater_point:
        warnings.append("no slater_point given; inward-direction guarantee not asserted")
    out.update(
        active_set=list(J.indices),
        slater_point_asserted=C.has_slater_point,
        direction=_direction_block(cd),
        gradient_check_max_error=finite_diff_gradient_check(C, x),
        t_grid=val.t_grid,
        max_values=val.max_values,
        feasible_prefix=val.feasible_prefix,
    )
    perturbed = []
    for v in _sample_perturbations(cd.radius, C.dim, args.perturb, args.seed):
        r = validate_direction_convex(C, x, cd.d + v, t_grid, tol)
        perturbed.append({"v": v, "feasible_prefix": r.feasible_prefix})
    out["perturbations"] = perturbed
    out["warnings"] = warnings
    return out


# -- driver -------------------------------------------------------------------


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help=f"relative tolerance (default: file value or {DEFAULT_TOL:g})")
    common.add_argument("--atol", type=float, default=None,
                        help=f"activity tolerance (default: file value or {DEFAULT_ATOL:g})")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--trials", type=int, default=100,
                        help="Monte-Carlo samples for interiorness checks (default 100)")
    common.add_argument("--allow-unknown", action="store_true",
                        help="accept unknown fields in the problem file")
    common.add_argument("--timing", action="store_true",
                        help="add wall-clock timing to the report (breaks byte-stability)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="circumcone", description=__doc__.split("\n\n")[0],
                                     parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("circumcenter", parents=[common], help="circumcenter of a point set")
    p.add_argument("file", nargs="?", default="-")

    p = sub.add_parser("direction", parents=[common],
                       help="conic base, circumcentric direction and interiorness radius")
    p.add_argument("file", nargs="?", default="-")

    p = sub.add_parser("check", parents=[common], help="membership and structure predicates")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--vector", help="comma-separated or JSON list; use --vector=-1,0 for negatives")
    for flag, helptext in [("polar", "w in the polar cone"), ("dual", "w in the dual cone"),
                           ("pointed", "cone contains no line"),
                           ("pli", "generators positively linearly independent"),
                           ("li", "generators linearly independent")]:
        p.add_argument(f"--{flag}", action="store_true", help=helptext)

    p = sub.add_parser("feasible", parents=[common], help="inward direction at a boundary point")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--point", help="point x (overrides the file's 'point')")
    p.add_argument("--perturb", type=int, default=0, metavar="K",
                   help="also test K perturbations d + v with ||v|| just below ||d||^2")
    p.add_argument("--t-grid", help="step sizes for convex systems (default 1e-6,...,1)")

    sub.add_parser("regression", parents=[common], help="run the packaged worked examples")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    """Parse ``argv``, execute the command and return ``(exit_code, report)``."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    if args.cmd == "regression":
        from .regression import run_all

        tol = DEFAULT_TOL if args.tol is None else args.tol
        results = run_all(tol=tol, seed=args.seed, trials=args.trials)
        report = {"command": "regression", "tolerances": {"tol": tol}, "seed": args.seed,
                  "trials": args.trials,
                  "cases": [{"name": n, "passed": ok, "detail": d} for n, ok, d in results]}
        code = EXIT_OK if all(ok for _, ok, _ in results) else EXIT_INVARIANT
        if args.timing:
            report["timing"] = {"seconds": time.perf_counter() - start}
        return code, report

    try:
        problem = load_problem(_read(args.file), allow_unknown=args.allow_unknown)
        tol = next(t for t in (args.tol, problem.tol, DEFAULT_TOL) if t is not None)
        atol = next(t for t in (args.atol, problem.atol, DEFAULT_ATOL) if t is not None)
        if args.cmd == "circumcenter":
            outputs = cmd_circumcenter(problem, args, tol)
        elif args.cmd == "direction":
            outputs = cmd_direction(problem, args, tol)
        elif args.cmd == "check":
            outputs = cmd_check(problem, args, tol)
        else:
            outputs = cmd_feasible(problem, args, tol, atol)
    except (InfeasiblePointError, InvariantError):
        raise
    except (ProblemFileError, OSError, ValueError) as exc:
        log.error("problem error: %s", exc)
        return EXIT_PARSE, None

    report = {
        "command": args.cmd,
        "argv": list(argv) if argv is not None else sys.argv[1:],
        "kind": problem.kind,
        "tolerances": {"tol": tol, "atol": atol},
        "seed": args.seed,
        "trials": args.trials,
        "outputs": outputs,
    }
    if args.timing:
        report["timing"] = {"seconds": time.perf_counter() - start}
    return EXIT_OK, report


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    try:
        code, report = run(argv)
    except InfeasiblePointError as exc:
        log.error("infeasible point: %s", exc)
        return EXIT_INFEASIBLE
    except InvariantError as exc:
        log.error("invariant violation: %s", exc)
        return EXIT_INVARIANT
    if report is not None:
        sys.stdout.write(dumps_report(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
