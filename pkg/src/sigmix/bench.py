"""Repeated-trial wall-clock timing of solvers on a fixed instance."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass

from .model import ProblemInstance, qualities_equal
from .solvers import get_solver

CSV_COLUMNS = ("instance_label", "solver", "trial", "wall_time_s", "quality")


@dataclass(frozen=True)
class BenchEntry:
    solver: str
    trial: int
    wall_time: float
    quality: float


@dataclass(frozen=True)
class SolverSummary:
    solver: str
    trials: int
    mean: float
    min: float
    max: float
    stddev: float


@dataclass(frozen=True)
class BenchReport:
    instance_label: str
    entries: tuple[BenchEntry, ...]

    @property
    def solvers(self) -> list[str]:
        return list(dict.fromkeys(e.solver for e in self.entries))

    def times(self, solver) -> list[float]:
        return [e.wall_time for e in self.entries if e.solver == solver]

    @property
    def summary(self) -> dict[str, SolverSummary]:
        out = {}
        for name in self.solvers:
            ts = self.times(name)
            out[name] = SolverSummary(
                name, len(ts), statistics.fmean(ts), min(ts), max(ts),
                statistics.pstdev(ts))
        return out

    @property
    def agreed_quality(self) -> bool:
        qs = [e.quality for e in self.entries]
        return all(qualities_equal(qs[0], q) for q in qs)


def run_benchmark(instance: ProblemInstance, solvers, trials: int = 20,
                  label: str = "instance") -> BenchReport:
    """Time each solver `trials` times, one run at a time.

    Only the solve call is timed; scenario parsing happens before.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    funcs = [(name, get_solver(name)) for name in solvers]
    entries = []
    for name, solve in funcs:
        for k in range(1, trials + 1):
            t0 = time.perf_counter()
            sol = solve(instance)
            elapsed = time.perf_counter() - t0
            entries.append(BenchEntry(name, k, elapsed, sol.totals.quality))
    return BenchReport(label, tuple(entries))


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        for e in rep.entries:
            writer.writerow([rep.instance_label, e.solver, e.trial,
                             repr(e.wall_time), repr(e.quality)])
    return buf.getvalue()


def reports_from_csv(text: str) -> list[BenchReport]:
    rows = list(csv.DictReader(io.StringIO(text)))
    grouped: dict[str, list[BenchEntry]] = {}
    for row in rows:
        grouped.setdefault(row["instance_label"], []).append(BenchEntry(
            row["solver"], int(row["trial"]),
            float(row["wall_time_s"]), float(row["quality"])))
    return [BenchReport(label, tuple(es)) for label, es in grouped.items()]


def format_table(reports) -> str:
    """Trials as rows, one column per (instance, solver), then an Avg row."""
    columns = [(rep, name) for rep in reports for name in rep.solvers]
    headers = ["Trial"] + [f"{rep.instance_label} {name}" for rep, name in columns]
    n_trials = max(len(rep.times(name)) for rep, name in columns)
    rows = []
    for k in range(n_trials):
        row = [str(k + 1)]
        for rep, name in columns:
            ts = rep.times(name)
            row.append(f"{ts[k]:.6f}" if k < len(ts) else "")
        rows.append(row)
    rows.append(["Avg"] + [f"{rep.summary[name].mean:.6f}" for rep, name in columns])
    widths = [max(len(r[j]) for r in [headers] + rows) for j in range(len(headers))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"
