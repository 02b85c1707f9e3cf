"""Command-line entry point: ``sigmix {optimize,sweep,bench,plan}``.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 for usage, parse or validation errors and 2 for solver failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import bench, sweep
from .errors import InputError, SolverError
from .model import load_scenario_file
from .planner import EpochError, load_schedule, plan_epochs
from .solvers import SOLVERS, solve

EXIT_INPUT = 1
EXIT_SOLVER = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _factor_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")


def _solver_list(text):
    names = [x.strip() for x in text.split(",") if x.strip()]
    bad = [n for n in names if n not in SOLVERS]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"solvers must be drawn from {sorted(SOLVERS)}, got {text!r}")
    return names


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser():
    parser = _Parser(prog="sigmix",
                     description="Optimal integer signal-mix selection.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, solver=True):
        if solver:
            p.add_argument("--solver", choices=sorted(SOLVERS), default="exact")
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("optimize", help="solve one scenario")
    p.add_argument("scenario")
    common(p)
    p.add_argument("--emit-timing", action="store_true",
                   help="include wall-clock solve time in the output")

    p = sub.add_parser("sweep", help="solve a one-parameter family of scenarios")
    p.add_argument("scenario")
    p.add_argument("--mode", choices=sweep.MODES, required=True)
    p.add_argument("--factors", type=_factor_list, required=True)
    common(p)

    p = sub.add_parser("bench", help="time solvers over repeated trials")
    p.add_argument("scenarios", nargs="+")
    p.add_argument("--solvers", type=_solver_list, default=["exact", "greedy"])
    p.add_argument("--trials", type=_positive_int, default=20)
    common(p, solver=False)

    p = sub.add_parser("plan", help="re-optimise each epoch of a schedule")
    p.add_argument("schedule")
    common(p)
    p.add_argument("--emit-timing", action="store_true")
    return parser


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _solution_table(sol, emit_timing):
    rows = [("solver", sol.solver_name), ("status", sol.status.value)]
    rows += [(f"n_{i}", str(c)) for i, c in enumerate(sol.mix.counts, 1)]
    rows += [("quality", sweep._num(sol.totals.quality)),
             ("energy", sweep._num(sol.totals.energy)),
             ("time", sweep._num(sol.totals.time)),
             ("nodes_explored", str(sol.nodes_explored))]
    if emit_timing:
        rows.append(("wall_time_s", f"{sol.wall_time:.6f}"))
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _solutions_csv(labelled, emit_timing):
    k = len(labelled[0][1].mix.counts)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["label", "solver", "status"] + [f"n_{i}" for i in range(1, k + 1)]
    header += ["quality", "energy", "time", "nodes_explored"]
    if emit_timing:
        header.append("wall_time_s")
    writer.writerow(header)
    for label, sol in labelled:
        row = [label, sol.solver_name, sol.status.value, *sol.mix.counts,
               repr(sol.totals.quality), repr(sol.totals.energy),
               repr(sol.totals.time), sol.nodes_explored]
        if emit_timing:
            row.append(repr(sol.wall_time))
        writer.writerow(row)
    return buf.getvalue()


def _cmd_optimize(args):
    inst = load_scenario_file(args.scenario)
    sol = solve(inst, args.solver)
    if args.format == "json":
        return _dump_json(sol.to_dict(args.emit_timing))
    if args.format == "csv":
        return _solutions_csv([(Path(args.scenario).stem, sol)], args.emit_timing)
    return _solution_table(sol, args.emit_timing)


def _cmd_sweep(args):
    base = load_scenario_file(args.scenario)
    report = sweep.run_sweep(sweep.SweepSpec(base, args.mode, args.factors),
                             args.solver)
    if args.format == "json":
        return _dump_json({
            "mode": report.mode,
            "solver": report.solver,
            "cases": [{"factor": c.factor, "counts": list(c.counts),
                       "quality": c.quality, "energy": c.energy, "time": c.time}
                      for c in report.cases],
        })
    if args.format == "csv":
        return sweep.sweep_to_csv(report)
    return sweep.format_table(report)


def _cmd_bench(args):
    instances = [(path, load_scenario_file(path)) for path in args.scenarios]
    reports = [bench.run_benchmark(inst, args.solvers, args.trials,
                                   label=Path(path).stem)
               for path, inst in instances]
    for rep in reports:
        if not rep.agreed_quality:
            print(f"warning: solvers disagree on quality for {rep.instance_label}",
                  file=sys.stderr)
    if args.format == "csv":
        return bench.reports_to_csv(reports)
    if args.format == "json":
        return _dump_json([{
            "instance_label": rep.instance_label,
            "agreed_quality": rep.agreed_quality,
            "entries": [{"solver": e.solver, "trial": e.trial,
                         "wall_time_s": e.wall_time, "quality": e.quality}
                        for e in rep.entries],
            "summary": {name: {"mean": s.mean, "min": s.min, "max": s.max,
                               "stddev": s.stddev, "trials": s.trials}
                        for name, s in rep.summary.items()},
        } for rep in reports])
    return bench.format_table(reports)


def _cmd_plan(args):
    with open(args.schedule, encoding="utf-8") as fh:
        schedule = load_schedule(fh.read())
    results = plan_epochs(schedule, args.solver)
    if args.format == "json":
        return _dump_json([{"label": label, "solution": sol.to_dict(args.emit_timing)}
                           for label, sol in results])
    if args.format == "csv":
        return _solutions_csv(results, args.emit_timing)
    return "\n".join(f"[{label}]\n{_solution_table(sol, args.emit_timing)}"
                     for label, sol in results)


_COMMANDS = {
    "optimize": _cmd_optimize,
    "sweep": _cmd_sweep,
    "bench": _cmd_bench,
    "plan": _cmd_plan,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _COMMANDS[args.command](args)
    except EpochError as exc:
        print(f"sigmix: {exc}", file=sys.stderr)
        return EXIT_SOLVER if isinstance(exc.cause, SolverError) else EXIT_INPUT
    except SolverError as exc:
        print(f"sigmix: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (InputError, OSError) as exc:
        print(f"sigmix: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
