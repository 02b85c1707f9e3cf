"""Brute-force enumeration of every count vector, for small instances.

Used as ground truth for the branch-and-bound solver.  The enumeration is
vectorised with numpy in fixed-size chunks of the mixed-radix index space.
"""

import time

import numpy as np

from .errors import SearchSpaceTooLarge
from .model import (QUALITY_RTOL, Mix, ProblemInstance, Solution, Status,
                    evaluate_mix, scale_to_integers)

ENUMERATION_LIMIT = 10**7
_CHUNK = 1 << 18


def search_space_size(instance: ProblemInstance) -> int:
    scaled = scale_to_integers(instance)
    size = 1
    for c in scaled.caps:
        size *= c + 1
    return size


def _better(a, b):
    """True if candidate `a` beats `b`; both are (quality, E, T, counts)."""
    if b is None:
        return True
    tol = QUALITY_RTOL * max(1.0, abs(a[0]), abs(b[0]))
    if a[0] > b[0] + tol:
        return True
    if a[0] < b[0] - tol:
        return False
    return a[1:] < b[1:]


def solve_brute(instance: ProblemInstance, limit: int = ENUMERATION_LIMIT) -> Solution:
    start = time.perf_counter()
    scaled = scale_to_integers(instance)
    # enumerate each type up to its stated cap and what the budgets allow alone
    radices = []
    for i in range(instance.size):
        r = min(scaled.energy_budget // scaled.energies[i],
                scaled.time_budget // scaled.times[i])
        if instance.cap(i) is not None:
            r = min(r, instance.cap(i))
        radices.append(r + 1)
    size = int(np.prod(radices, dtype=object))
    if size > limit:
        raise SearchSpaceTooLarge(size, limit)

    radices = np.array(radices, dtype=np.int64)
    strides = np.ones_like(radices)
    for j in range(len(radices) - 2, -1, -1):
        strides[j] = strides[j + 1] * radices[j + 1]
    q = np.array(scaled.qualities, dtype=float)
    e = np.array(scaled.energies, dtype=np.int64)
    t = np.array(scaled.times, dtype=np.int64)

    best = None
    for lo in range(0, size, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, size), dtype=np.int64)
        counts = (idx[:, None] // strides) % radices
        energy = counts @ e
        ctime = counts @ t
        ok = (energy <= scaled.energy_budget) & (ctime <= scaled.time_budget)
        if not ok.any():
            continue
        counts, energy, ctime = counts[ok], energy[ok], ctime[ok]
        quality = counts @ q
        top = quality.max()
        near = quality >= top - QUALITY_RTOL * max(1.0, abs(top))
        counts, energy, ctime, quality = (
            counts[near], energy[near], ctime[near], quality[near])
        keys = [counts[:, j] for j in range(counts.shape[1] - 1, -1, -1)]
        pick = np.lexsort(keys + [ctime, energy])[0]
        cand = (float(quality[pick]), int(energy[pick]), int(ctime[pick]),
                tuple(int(c) for c in counts[pick]))
        if _better(cand, best):
            best = cand

    mix = Mix(best[3])
    return Solution(mix, evaluate_mix(instance, mix), Status.ENUMERATED_OPTIMAL,
                    "oracle", size, time.perf_counter() - start)
