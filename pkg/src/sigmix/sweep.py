"""One-parameter families of instances derived from a base instance.

``energy-linear``: each type's energy becomes ``factor * quality``.
``time-inverse``: each type's time becomes ``factor / quality``.
Everything else is taken from the base instance.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import InputError, ScenarioError
from .model import ProblemInstance, SignalType, scale_to_integers
from .solvers import get_solver

MODES = ("energy-linear", "time-inverse")


class SweepError(InputError):
    def __init__(self, factor, cause):
        self.factor = factor
        self.cause = cause
        super().__init__(f"factor {factor!r}: {cause}")


@dataclass(frozen=True)
class SweepSpec:
    base: ProblemInstance
    mode: str
    factors: tuple[float, ...]

    def __post_init__(self):
        if self.mode not in MODES:
            raise ScenarioError(f"must be one of {MODES}, got {self.mode!r}", "mode")
        factors = tuple(float(f) for f in self.factors)
        if not factors:
            raise ScenarioError("at least one factor is required", "factors")
        if any(not f > 0 for f in factors):
            raise ScenarioError(f"must be positive, got {factors}", "factors")
        object.__setattr__(self, "factors", factors)


@dataclass(frozen=True)
class SweepCase:
    factor: float
    counts: tuple[int, ...]
    quality: float
    energy: float
    time: float


@dataclass(frozen=True)
class SweepReport:
    mode: str
    solver: str
    cases: tuple[SweepCase, ...]

    @property
    def qualities(self) -> list[float]:
        return [c.quality for c in self.cases]


def derive_instance(base: ProblemInstance, mode: str, factor: float) -> ProblemInstance:
    if mode == "energy-linear":
        types = [SignalType(t.id, t.quality, factor * t.quality, t.time)
                 for t in base.types]
    elif mode == "time-inverse":
        types = [SignalType(t.id, t.quality, t.energy, factor / t.quality)
                 for t in base.types]
    else:
        raise ScenarioError(f"must be one of {MODES}, got {mode!r}", "mode")
    return base.replace_types(types)


def run_sweep(spec: SweepSpec, solver="exact") -> SweepReport:
    solve = get_solver(solver)
    cases = []
    for f in spec.factors:
        try:
            inst = derive_instance(spec.base, spec.mode, f)
            scale_to_integers(inst)
        except InputError as exc:
            raise SweepError(f, exc) from exc
        sol = solve(inst)
        cases.append(SweepCase(f, sol.mix.counts, sol.totals.quality,
                               sol.totals.energy, sol.totals.time))
    return SweepReport(spec.mode, solver, tuple(cases))


def _num(x) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def sweep_to_csv(report: SweepReport) -> str:
    k = len(report.cases[0].counts)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["factor"] + [f"n_{i}" for i in range(1, k + 1)]
                    + ["quality", "energy_used", "time_used"])
    for c in report.cases:
        writer.writerow([_num(c.factor), *c.counts, _num(c.quality),
                         _num(c.energy), _num(c.time)])
    return buf.getvalue()


def format_table(report: SweepReport) -> str:
    """Types as rows and cases as columns, closed by a quality row."""
    k = len(report.cases[0].counts)
    header = ["Type/case"] + [str(j + 1) for j in range(len(report.cases))]
    rows = [["factor"] + [_num(c.factor) for c in report.cases]]
    rows += [[str(i + 1)] + [str(c.counts[i]) for c in report.cases]
             for i in range(k)]
    rows.append(["Quality"] + [_num(c.quality) for c in report.cases])
    widths = [max(len(r[j]) for r in [header] + rows) for j in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths))
                     for r in [header] + rows) + "\n"
