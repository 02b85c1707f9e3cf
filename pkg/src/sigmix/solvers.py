"""Name-based solver lookup shared by the bench, sweep, planner and CLI."""

from .errors import UnknownSolverError
from .exact import solve_exact
from .greedy import solve_greedy
from .oracle import solve_brute

SOLVERS = {
    "exact": solve_exact,
    "greedy": solve_greedy,
    "oracle": solve_brute,
}


def get_solver(name):
    try:
        return SOLVERS[name]
    except KeyError:
        raise UnknownSolverError(
            f"unknown solver {name!r}; choose from {sorted(SOLVERS)}") from None


def solve(instance, solver="exact"):
    return get_solver(solver)(instance)
