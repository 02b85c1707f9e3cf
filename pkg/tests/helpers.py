"""Shared generators and independent checks for the test suite."""

from fractions import Fraction
from itertools import product

import numpy as np

from sigmix import make_instance


def random_corpus(n, seed=20201018, max_mixes=10**5):
    """Small random instances whose full search space has <= max_mixes points."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        k = int(rng.integers(2, 6))
        if rng.random() < 0.5:
            q = [float(x) for x in rng.integers(1, 21, size=k)]
        else:
            q = [round(float(x), 1) for x in rng.uniform(1, 20, size=k)]
        if rng.random() < 0.5:
            e = [float(x) for x in rng.integers(10, 501, size=k)]
        else:
            # coarse grid makes co-optimal mixes common
            e = [float(x) for x in 10 * rng.integers(1, 51, size=k)]
        t = [round(float(x), 1) for x in rng.uniform(0.5, 5, size=k)]
        e_budget = float(round(rng.uniform(0.5, 25) * np.mean(e)))
        t_budget = round(float(rng.uniform(0.5, 25) * np.mean(t)), 1)
        kwargs = {}
        r = rng.random()
        if r < 0.25:
            kwargs["per_type_cap"] = int(rng.integers(0, 6))
        elif r < 0.4:
            kwargs["per_type_caps_override"] = tuple(
                int(c) for c in rng.integers(0, 8, size=k))
        inst = make_instance(q, e, t, e_budget, t_budget, **kwargs)
        size = 1
        for i in range(k):
            cap = min(int(e_budget // e[i]), int(round(t_budget * 10)) // int(round(t[i] * 10)))
            if inst.cap(i) is not None:
                cap = min(cap, inst.cap(i))
            size *= cap + 1
        if size <= max_mixes:
            out.append(inst)
    return out


def exact_accounting(instance, counts):
    """Feasibility and totals recomputed with Fractions from decimal strings."""
    e = sum(n * Fraction(repr(t.energy)) for n, t in zip(counts, instance.types))
    t_ = sum(n * Fraction(repr(t.time)) for n, t in zip(counts, instance.types))
    q = sum(n * Fraction(repr(t.quality)) for n, t in zip(counts, instance.types))
    caps_ok = all(instance.cap(i) is None or n <= instance.cap(i)
                  for i, n in enumerate(counts))
    feasible = (e <= Fraction(repr(instance.energy_budget))
                and t_ <= Fraction(repr(instance.time_budget)) and caps_ok)
    return q, e, t_, feasible


def all_optima(instance):
    """Every optimal count vector, by plain itertools enumeration in Fractions."""
    ranges = []
    for i, t in enumerate(instance.types):
        hi = int(Fraction(repr(instance.energy_budget)) // Fraction(repr(t.energy)))
        hi = min(hi, int(Fraction(repr(instance.time_budget)) // Fraction(repr(t.time))))
        if instance.cap(i) is not None:
            hi = min(hi, instance.cap(i))
        ranges.append(range(hi + 1))
    best, found = None, []
    for counts in product(*ranges):
        q, e, t, ok = exact_accounting(instance, counts)
        if not ok:
            continue
        if best is None or q > best:
            best, found = q, [counts]
        elif q == best:
            found.append(counts)
    return best, found


def milp_optimum(instance):
    """Optimal quality from scipy's HiGHS MILP, an independent third route."""
    from scipy.optimize import Bounds, LinearConstraint, milp

    q = np.array([t.quality for t in instance.types])
    a = np.array([[t.energy for t in instance.types],
                  [t.time for t in instance.types]])
    ub = [instance.cap(i) if instance.cap(i) is not None else np.inf
          for i in range(instance.size)]
    res = milp(-q, constraints=LinearConstraint(
                   a, -np.inf, [instance.energy_budget, instance.time_budget]),
               integrality=np.ones(instance.size), bounds=Bounds(0, ub))
    assert res.success
    return -res.fun, tuple(int(round(x)) for x in res.x)
