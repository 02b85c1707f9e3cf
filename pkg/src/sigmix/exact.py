"""Depth-first branch-and-bound for the integer signal-mix problem.

Types are fixed one at a time in greedy score order, trying the largest
feasible count first.  A node is pruned when the sum of its accrued
quality and a fractional-knapsack bound on the remainder cannot reach the
incumbent.  Subtrees that could tie the incumbent are still searched so
that the canonical co-optimal mix (least energy, then least time, then
lexicographically smallest counts) is the one returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import SearchBudgetExhausted
from .greedy import greedy_counts, score_order
from .model import (QUALITY_RTOL, Mix, ProblemInstance, ScaledInstance,
                    Solution, Status, evaluate_mix, scale_to_integers)

NODE_LIMIT = 50_000_000


@dataclass(frozen=True)
class SearchNode:
    depth: int
    fixed_counts: tuple[int, ...]
    remaining_energy: int
    remaining_time: int
    partial_quality: float


def _fractional_fill(items, capacity):
    """Continuous bounded knapsack. `items` are (quality, weight, cap),
    sorted by quality/weight descending."""
    total = 0.0
    for q, w, cap in items:
        if cap * w <= capacity:
            total += cap * q
            capacity -= cap * w
        else:
            total += q * capacity / w
            break
    return total


class _Bounds:
    """Per-depth item lists for the energy and time relaxations."""

    def __init__(self, scaled: ScaledInstance, order: list[int]):
        q, e, t, caps = scaled.qualities, scaled.energies, scaled.times, scaled.caps
        self.energy = []
        self.time = []
        for d in range(len(order) + 1):
            rest = order[d:]
            self.energy.append(sorted(
                ((q[i], e[i], caps[i]) for i in rest if caps[i] > 0),
                key=lambda it: -it[0] / it[1]))
            self.time.append(sorted(
                ((q[i], t[i], caps[i]) for i in rest if caps[i] > 0),
                key=lambda it: -it[0] / it[1]))

    def remainder(self, depth, rem_e, rem_t):
        return min(_fractional_fill(self.energy[depth], rem_e),
                   _fractional_fill(self.time[depth], rem_t))


def upper_bound(node: SearchNode, instance: ProblemInstance) -> float:
    """Bound on the best total quality reachable by completing `node`.

    Each budget on its own gives a fractional bounded-knapsack relaxation
    over the types not yet fixed; the smaller of the two is returned,
    plus the quality already accrued.
    """
    scaled = scale_to_integers(instance)
    bounds = _Bounds(scaled, score_order(instance))
    return node.partial_quality + bounds.remainder(
        node.depth, node.remaining_energy, node.remaining_time)


def root_node(instance: ProblemInstance) -> SearchNode:
    scaled = scale_to_integers(instance)
    return SearchNode(0, (), scaled.energy_budget, scaled.time_budget, 0.0)


class _Search:
    def __init__(self, scaled: ScaledInstance, order, node_limit):
        self.q = scaled.qualities
        self.e = scaled.energies
        self.t = scaled.times
        self.caps = scaled.caps
        self.E = scaled.energy_budget
        self.T = scaled.time_budget
        self.order = order
        self.n = len(order)
        self.bounds = _Bounds(scaled, order)
        self.node_limit = node_limit
        self.nodes = 0
        self.counts = [0] * self.n
        self.best_q = -1.0
        self.best_key = None

    def offer(self, counts, quality, used_e, used_t):
        key = (used_e, used_t, tuple(counts))
        tol = QUALITY_RTOL * max(1.0, abs(quality), abs(self.best_q))
        if quality > self.best_q + tol or (
                quality >= self.best_q - tol and key < self.best_key):
            self.best_q = quality
            self.best_key = key

    def run(self):
        self._visit(0, self.E, self.T, 0.0)

    def _visit(self, depth, rem_e, rem_t, partial):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise SearchBudgetExhausted(self.node_limit)
        if depth == self.n:
            self.offer(self.counts, partial, self.E - rem_e, self.T - rem_t)
            return
        bound = partial + self.bounds.remainder(depth, rem_e, rem_t)
        tol = QUALITY_RTOL * max(1.0, abs(self.best_q))
        if bound < self.best_q - tol:
            return
        k = self.order[depth]
        e, t, q = self.e[k], self.t[k], self.q[k]
        hi = min(self.caps[k], rem_e // e, rem_t // t)
        for c in range(hi, -1, -1):
            self.counts[k] = c
            self._visit(depth + 1, rem_e - c * e, rem_t - c * t, partial + c * q)
        self.counts[k] = 0


def solve_exact(instance: ProblemInstance, node_limit: int = NODE_LIMIT) -> Solution:
    """Proven-optimal mix, canonical among co-optimal mixes.

    Raises `SearchBudgetExhausted` if more than `node_limit` nodes would
    be visited.
    """
    start = time.perf_counter()
    scaled = scale_to_integers(instance)
    search = _Search(scaled, score_order(instance), node_limit)
    seed = greedy_counts(instance)
    seed_totals = evaluate_mix(instance, seed)
    search.offer(seed, seed_totals.quality,
                 seed_totals.energy_units, seed_totals.time_units)
    search.run()
    mix = Mix(search.best_key[2])
    return Solution(mix, evaluate_mix(instance, mix), Status.PROVEN_OPTIMAL,
                    "exact", search.nodes, time.perf_counter() - start)
