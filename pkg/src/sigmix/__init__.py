"""Optimal integer signal-mix selection under energy, time and count budgets."""

from importlib import resources

from .bench import BenchReport, run_benchmark
from .errors import (DimensionError, InputError, ResolutionError, ScenarioError,
                     SearchBudgetExhausted, SearchSpaceTooLarge, SigmixError,
                     SolverError, UnknownSolverError)
from .exact import SearchNode, solve_exact, upper_bound
from .greedy import solve_greedy, type_score
from .model import (Mix, MixTotals, ProblemInstance, ScaledInstance, SignalType,
                    Solution, Status, evaluate_mix, load_scenario,
                    load_scenario_file, make_instance, render_scenario,
                    scale_to_integers)
from .oracle import solve_brute
from .planner import EpochError, EpochSchedule, load_schedule, plan_epochs
from .solvers import SOLVERS, get_solver, solve
from .sweep import SweepReport, SweepSpec, run_sweep

__version__ = "0.1.0"


def data_path(name):
    """Path to one of the bundled scenario or schedule documents."""
    return resources.files(__name__).joinpath("data", name)


def builtin_scenario(name) -> ProblemInstance:
    """Load a bundled scenario, e.g. ``builtin_scenario("basic_case")``."""
    return load_scenario(data_path(f"{name}.json").read_text(encoding="utf-8"))
