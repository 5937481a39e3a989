"""Command-line interface.

    qucurve [--gamma G] [--oracle] report     --input problem.json
    qucurve trajectory --input problem.json --t-max T --steps N --output out.csv
    qucurve sweep      --input problem.json --param NAME --from A --to B \\
                       --points N --output out.csv
    qucurve validate   [--perturb CASE]

Exit codes: 0 success, 2 malformed input (schema/usage), 3 degenerate
geometry (the state is an eigenstate of its Hamiltonian).  All numeric
output is deterministic: identical inputs give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from .config import SpecError, load_problem_spec
from .evolution import StationaryStateError
from .reporting import build_report, sweep_row, trajectory_rows
from .validation import PERTURBABLE_CASES, run_validation

__all__ = ["main", "entry_point"]

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_DEGENERATE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qucurve",
        description="Curvature and torsion of quantum state evolution.",
    )
    parser.add_argument(
        "--gamma",
        type=float,
        default=None,
        help="Fubini-Study metric prefactor; overrides the problem file's option (default 2).",
    )
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="also run the finite-difference fits and include them in reports",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="print a JSON geometry report")
    p_report.add_argument("--input", required=True, metavar="PATH", help="problem JSON file")

    p_traj = sub.add_parser("trajectory", help="write a CSV of the evolved state over time")
    p_traj.add_argument("--input", required=True, metavar="PATH")
    p_traj.add_argument("--t-max", required=True, type=float, dest="t_max")
    p_traj.add_argument("--steps", required=True, type=int)
    p_traj.add_argument("--output", required=True, metavar="PATH")

    p_sweep = sub.add_parser("sweep", help="write a CSV of geometry versus one parameter")
    p_sweep.add_argument("--input", required=True, metavar="PATH")
    p_sweep.add_argument("--param", required=True, help="named coupling or state parameter")
    p_sweep.add_argument("--from", required=True, type=float, dest="start")
    p_sweep.add_argument("--to", required=True, type=float, dest="stop")
    p_sweep.add_argument("--points", required=True, type=int)
    p_sweep.add_argument("--output", required=True, metavar="PATH")

    p_val = sub.add_parser("validate", help="run the built-in validation suite")
    p_val.add_argument(
        "--perturb",
        default=None,
        metavar="CASE",
        help=f"negative control: corrupt one fixture of CASE ({', '.join(PERTURBABLE_CASES)})",
    )
    return parser


def _cmd_report(args) -> int:
    spec = load_problem_spec(args.input)
    hamiltonian, state = spec.build()
    gamma = args.gamma if args.gamma is not None else spec.options["gamma"]
    report = build_report(
        hamiltonian,
        state,
        gamma=gamma,
        s_samples=spec.options["s_samples"],
        with_oracle=args.oracle,
        dt_grid=spec.options["dt_grid"],
    )
    print(report.to_json())
    return EXIT_OK


def _cmd_trajectory(args) -> int:
    spec = load_problem_spec(args.input)
    hamiltonian, state = spec.build()
    if args.steps < 2:
        raise SpecError("--steps", f"must be >= 2, got {args.steps}")
    if args.t_max <= 0:
        raise SpecError("--t-max", f"must be positive, got {args.t_max}")
    header, rows = trajectory_rows(hamiltonian, state, args.t_max, args.steps)
    with open(args.output, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    spec = load_problem_spec(args.input)
    if args.points < 2:
        raise SpecError("--points", f"must be >= 2, got {args.points}")
    grid = np.linspace(args.start, args.stop, args.points)
    rows = []
    for value in grid:
        bound = spec.with_parameter(args.param, float(value))
        hamiltonian, state = bound.build()
        rows.append(sweep_row(hamiltonian, state, float(value), spec.options["efficiency_t"]))
    with open(args.output, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["param", "kappa_sq", "tau_sq", "eta", "alpha4", "alpha3_sq"])
        writer.writerows(rows)
    return EXIT_OK


def _cmd_validate(args) -> int:
    try:
        results = run_validation(perturb=args.perturb)
    except ValueError as exc:
        raise SpecError("--perturb", str(exc)) from exc
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        failures += 0 if res.passed else 1
        print(f"{status}  {res.name:28s} residual={res.residual:.3e}  tol={res.tolerance:.0e}")
    print(f"{len(results) - failures}/{len(results)} validation cases passed")
    return EXIT_OK if failures == 0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the schema-error code
        return int(exc.code) if exc.code else EXIT_OK
    try:
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "trajectory":
            return _cmd_trajectory(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_validate(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except StationaryStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


def entry_point():
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
