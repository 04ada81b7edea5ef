"""Command-line interface.

Subcommands: solve-grr, solve-mra, trace, benchmark, contours, serve.
Exit codes: 0 success, 1 solver or infeasibility failure, 2 usage or
validation error.  All diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys

from .dispatch import solve_scenario, trace_scenario
from .document import document_to_json, result_to_document
from .errors import (ScenarioError, UndefinedDirectionError,
                     UnreachableTargetError, UnsupportedConfigurationError,
                     WindExceedsAirspeedError)
from .scenario import GrrProblem, MrapProblem, load_scenario

EXIT_OK = 0
EXIT_SOLVER = 1
EXIT_USAGE = 2


def _add_scenario_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scenario", help="path to a scenario JSON document")
    parser.add_argument("--preset", help="built-in preset name")
    parser.add_argument("--out", help="output path (default: stdout)")


def _parse_target(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ScenarioError(f"target must be X,Y, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ScenarioError(f"target must be numeric X,Y, got {text!r}") from exc


def _load(args) -> object:
    if args.scenario and args.preset:
        raise ScenarioError("give either --scenario or --preset, not both")
    source = args.scenario or args.preset
    if not source:
        raise ScenarioError("a --scenario path or --preset name is required")
    scenario, _ = load_scenario(source)
    return scenario


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
            fh.write("\n")
    else:
        sys.stdout.write(text + "\n")


def _cmd_solve(args, expect) -> int:
    scenario = _load(args)
    if not isinstance(scenario.problem, expect):
        kind = "reachable-region" if expect is GrrProblem else "return-altitude"
        raise UnsupportedConfigurationError(
            f"scenario problem does not match the {kind} solver")
    result = solve_scenario(scenario)
    _emit(document_to_json(result_to_document(result)), args.out)
    return EXIT_OK


def _cmd_trace(args) -> int:
    scenario = _load(args)
    target = _parse_target(args.target)
    result = solve_scenario(scenario)
    traj = trace_scenario(result, scenario, target)
    doc = result_to_document(result, trajectories=[traj])
    _emit(document_to_json(doc), args.out)
    return EXIT_OK


def _cmd_contours(args) -> int:
    from .contours import extract_contours
    from .document import field_array

    scenario = _load(args)
    try:
        levels = [float(v) for v in args.levels.split(",") if v.strip()]
    except ValueError as exc:
        raise ScenarioError(f"levels must be numeric, got {args.levels!r}") from exc
    result = solve_scenario(scenario)
    doc = result_to_document(result)
    contour_sets = extract_contours(field_array(doc), levels, scenario.grid)
    doc = result_to_document(result, contour_sets=contour_sets)
    _emit(document_to_json(doc), args.out)
    return EXIT_OK


def _cmd_benchmark(args) -> int:
    from .verification import BENCHMARKS, run_benchmark

    if args.suite and args.suite != "appendix-g":
        raise ScenarioError(f"unknown suite {args.suite!r}")
    names = [args.name] if args.name else list(BENCHMARKS)
    failed = False
    for name in names:
        if name not in BENCHMARKS:
            raise ScenarioError(f"unknown benchmark {name!r}")
        try:
            _, report = run_benchmark(name)
        except AssertionError as exc:
            failed = True
            print(f"{name}: FAILED {exc}", file=sys.stderr)
            continue
        summary = report.summary() if report else "solved (no oracle)"
        print(f"{name}: {summary}")
    return EXIT_SOLVER if failed else EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gliderange",
        description="Gliding reachable-region and minimal return-altitude solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-grr", help="solve the gliding reachable region")
    _add_scenario_args(p)
    p = sub.add_parser("solve-mra", help="solve the minimal return altitude")
    _add_scenario_args(p)
    p = sub.add_parser("trace", help="solve and trace a path to/from a target")
    _add_scenario_args(p)
    p.add_argument("--target", required=True, help="target as X,Y")
    p = sub.add_parser("contours", help="solve and extract contour polylines")
    _add_scenario_args(p)
    p.add_argument("--levels", required=True, help="comma-separated level values")
    p = sub.add_parser("benchmark", help="run verification benchmarks")
    p.add_argument("--suite", help="benchmark suite name (appendix-g)")
    p.add_argument("--name", help="run a single named benchmark")
    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "solve-grr":
            return _cmd_solve(args, GrrProblem)
        if args.command == "solve-mra":
            return _cmd_solve(args, MrapProblem)
        if args.command == "trace":
            return _cmd_trace(args)
        if args.command == "contours":
            return _cmd_contours(args)
        if args.command == "benchmark":
            return _cmd_benchmark(args)
        if args.command == "serve":
            return _cmd_serve(args)
        parser.error(f"unknown command {args.command!r}")
    except (ScenarioError, UnsupportedConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnreachableTargetError, UndefinedDirectionError,
            WindExceedsAirspeedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
