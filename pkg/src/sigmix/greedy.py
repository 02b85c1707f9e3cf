"""Single-pass greedy heuristic.

Types are ranked by quality per unit of (energy x time).  Each type in
turn takes as many signals as its cap and the remaining budgets allow.
There is no backtracking, so the result can be suboptimal.
"""

import time

from .model import (Mix, ProblemInstance, SignalType, Solution, Status,
                    evaluate_mix, scale_to_integers)


def type_score(t: SignalType) -> float:
    return t.quality / (t.energy * t.time)


def score_order(instance: ProblemInstance) -> list[int]:
    """List positions of the types, best score first, ties to the lower id."""
    return sorted(range(instance.size),
                  key=lambda i: (-type_score(instance.types[i]),
                                 instance.types[i].id))


def greedy_counts(instance: ProblemInstance) -> tuple[int, ...]:
    scaled = scale_to_integers(instance)
    rem_e, rem_t = scaled.energy_budget, scaled.time_budget
    counts = [0] * instance.size
    for i in score_order(instance):
        e, t = scaled.energies[i], scaled.times[i]
        n = min(scaled.caps[i], rem_e // e, rem_t // t)
        counts[i] = n
        rem_e -= n * e
        rem_t -= n * t
    return tuple(counts)


def solve_greedy(instance: ProblemInstance) -> Solution:
    start = time.perf_counter()
    mix = Mix(greedy_counts(instance))
    totals = evaluate_mix(instance, mix)
    return Solution(mix, totals, Status.HEURISTIC, "greedy", 0,
                    time.perf_counter() - start)
