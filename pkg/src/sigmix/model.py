"""Problem types, scenario documents, integer scaling and mix evaluation.

A problem instance is a set of signal types, each with a per-signal
quality, energy cost and compute time, together with an energy budget, a
compute-time budget and optional per-type count caps.  A *mix* is an
integer count per type.  The objective is the total quality of the mix;
it is feasible when its total energy and total time fit within the
budgets and no type exceeds its count cap.

Energies and times are converted to integer multiples of a declared
resolution before any feasibility test, so a mix that exactly exhausts a
budget is always recognised as feasible.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Optional, Sequence

from .errors import DimensionError, ResolutionError, ScenarioError

DEFAULT_ENERGY_RESOLUTION = 1.0
DEFAULT_TIME_RESOLUTION = 0.1

# relative tolerance for "is this value a multiple of its resolution"
RESOLUTION_RTOL = 1e-9
# relative tolerance for "are these two qualities equal"
QUALITY_RTOL = 1e-9

_SCENARIO_KEYS = {
    "types", "energy_budget", "time_budget", "per_type_cap",
    "per_type_caps", "energy_resolution", "time_resolution",
}
_TYPE_KEYS = {"id", "quality", "energy", "time"}


def _is_number(value):
    return (isinstance(value, (int, float)) and not isinstance(value, bool)
            and math.isfinite(value))


def _positive(name, value):
    if not _is_number(value):
        raise ScenarioError(f"expected a number, got {value!r}", name)
    if value <= 0:
        raise ScenarioError(f"must be positive, got {value!r}", name)
    return float(value)


def _count(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"expected an integer, got {value!r}", name)
    if value < 0:
        raise ScenarioError(f"must be non-negative, got {value!r}", name)
    return value


def qualities_equal(a: float, b: float) -> bool:
    return abs(a - b) <= QUALITY_RTOL * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class SignalType:
    id: int
    quality: float
    energy: float
    time: float

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, int) or self.id < 1:
            raise ScenarioError(f"must be a positive integer, got {self.id!r}", "id")
        for name in ("quality", "energy", "time"):
            object.__setattr__(
                self, name, _positive(f"type {self.id} {name}", getattr(self, name)))


@dataclass(frozen=True)
class ProblemInstance:
    types: tuple[SignalType, ...]
    energy_budget: float
    time_budget: float
    per_type_cap: Optional[int] = None
    per_type_caps_override: Optional[tuple[int, ...]] = None
    energy_resolution: float = DEFAULT_ENERGY_RESOLUTION
    time_resolution: float = DEFAULT_TIME_RESOLUTION

    def __post_init__(self):
        types = tuple(self.types)
        if not types:
            raise ScenarioError("at least one signal type is required", "types")
        ids = sorted(t.id for t in types)
        if ids != list(range(1, len(types) + 1)):
            raise ScenarioError(
                f"ids must be unique and contiguous from 1, got {ids}", "types")
        object.__setattr__(self, "types", types)
        object.__setattr__(
            self, "energy_budget", _positive("energy_budget", self.energy_budget))
        object.__setattr__(
            self, "time_budget", _positive("time_budget", self.time_budget))
        object.__setattr__(
            self, "energy_resolution",
            _positive("energy_resolution", self.energy_resolution))
        object.__setattr__(
            self, "time_resolution",
            _positive("time_resolution", self.time_resolution))
        if self.per_type_cap is not None:
            _count("per_type_cap", self.per_type_cap)
        if self.per_type_caps_override is not None:
            caps = tuple(_count("per_type_caps", c)
                         for c in self.per_type_caps_override)
            if len(caps) != len(types):
                raise ScenarioError(
                    f"has {len(caps)} entries for {len(types)} types",
                    "per_type_caps")
            object.__setattr__(self, "per_type_caps_override", caps)

    @property
    def size(self) -> int:
        return len(self.types)

    def cap(self, index: int) -> Optional[int]:
        """Stated count cap of the type at list position `index`, or None."""
        if self.per_type_caps_override is not None:
            return self.per_type_caps_override[index]
        return self.per_type_cap

    def replace_types(self, types) -> "ProblemInstance":
        return ProblemInstance(
            types=tuple(types),
            energy_budget=self.energy_budget,
            time_budget=self.time_budget,
            per_type_cap=self.per_type_cap,
            per_type_caps_override=self.per_type_caps_override,
            energy_resolution=self.energy_resolution,
            time_resolution=self.time_resolution,
        )


@dataclass(frozen=True)
class Mix:
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        for c in counts:
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise DimensionError(f"counts must be non-negative integers, got {c!r}")
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __len__(self):
        return len(self.counts)

    def __add__(self, other: "Mix") -> "Mix":
        if len(self) != len(other):
            raise DimensionError("cannot add mixes of different lengths")
        return Mix(tuple(a + b for a, b in zip(self.counts, other.counts)))


@dataclass(frozen=True)
class MixTotals:
    quality: float
    energy: float
    time: float
    feasible: bool
    # exact integer consumption in resolution units
    energy_units: int = 0
    time_units: int = 0


class Status(str, Enum):
    PROVEN_OPTIMAL = "proven-optimal"
    HEURISTIC = "heuristic"
    ENUMERATED_OPTIMAL = "enumerated-optimal"


@dataclass(frozen=True)
class Solution:
    mix: Mix
    totals: MixTotals
    status: Status
    solver_name: str
    nodes_explored: int = 0
    wall_time: float = field(default=0.0, compare=False)

    @property
    def quality(self) -> float:
        return self.totals.quality

    def to_dict(self, include_timing=False) -> dict:
        out = {
            "solver": self.solver_name,
            "status": self.status.value,
            "counts": list(self.mix.counts),
            "quality": self.totals.quality,
            "energy": self.totals.energy,
            "time": self.totals.time,
            "feasible": self.totals.feasible,
            "nodes_explored": self.nodes_explored,
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


@dataclass(frozen=True)
class ScaledInstance:
    """Integer view of a `ProblemInstance`.

    `energies`, `times` and the budgets are integer multiples of the
    instance resolutions.  `caps` are the effective per-type caps: the
    stated cap tightened by what either budget allows for that type alone.
    """

    instance: ProblemInstance
    qualities: tuple[float, ...]
    energies: tuple[int, ...]
    times: tuple[int, ...]
    energy_budget: int
    time_budget: int
    caps: tuple[int, ...]

    def energy_value(self, units: int) -> float:
        return _from_units(units, self.instance.energy_resolution)

    def time_value(self, units: int) -> float:
        return _from_units(units, self.instance.time_resolution)


def _to_units(name, value, resolution):
    ratio = value / resolution
    units = round(ratio)
    if abs(ratio - units) > RESOLUTION_RTOL * max(1.0, abs(ratio)):
        raise ResolutionError(name, value, resolution)
    return int(units)


def _from_units(units, resolution):
    # decimal product avoids 3 * 0.1 == 0.30000000000000004 in reports
    return float(Decimal(repr(resolution)) * units)


def scale_to_integers(instance: ProblemInstance) -> ScaledInstance:
    er, tr = instance.energy_resolution, instance.time_resolution
    energies = tuple(_to_units(f"type {t.id} energy", t.energy, er)
                     for t in instance.types)
    times = tuple(_to_units(f"type {t.id} time", t.time, tr)
                  for t in instance.types)
    e_budget = _to_units("energy_budget", instance.energy_budget, er)
    t_budget = _to_units("time_budget", instance.time_budget, tr)
    for name, units in (("energy", energies), ("time", times)):
        for t, u in zip(instance.types, units):
            if u <= 0:
                raise ResolutionError(
                    f"type {t.id} {name}", getattr(t, name),
                    er if name == "energy" else tr)
    caps = []
    for i, (e, t) in enumerate(zip(energies, times)):
        cap = min(e_budget // e, t_budget // t)
        stated = instance.cap(i)
        if stated is not None:
            cap = min(cap, stated)
        caps.append(cap)
    return ScaledInstance(
        instance=instance,
        qualities=tuple(t.quality for t in instance.types),
        energies=energies,
        times=times,
        energy_budget=e_budget,
        time_budget=t_budget,
        caps=tuple(caps),
    )


def evaluate_mix(instance: ProblemInstance, mix) -> MixTotals:
    if not isinstance(mix, Mix):
        mix = Mix(tuple(mix))
    if len(mix) != instance.size:
        raise DimensionError(
            f"mix has {len(mix)} counts for {instance.size} types")
    scaled = scale_to_integers(instance)
    counts = mix.counts
    e_units = sum(n * e for n, e in zip(counts, scaled.energies))
    t_units = sum(n * t for n, t in zip(counts, scaled.times))
    within_caps = all(
        instance.cap(i) is None or n <= instance.cap(i)
        for i, n in enumerate(counts))
    return MixTotals(
        quality=math.fsum(n * q for n, q in zip(counts, scaled.qualities)),
        energy=scaled.energy_value(e_units),
        time=scaled.time_value(t_units),
        feasible=(e_units <= scaled.energy_budget
                  and t_units <= scaled.time_budget and within_caps),
        energy_units=e_units,
        time_units=t_units,
    )


def canonical_key(totals: MixTotals, mix: Mix):
    """Secondary ordering among co-optimal mixes; smaller is preferred."""
    return (totals.energy_units, totals.time_units, mix.counts)


# -- scenario documents ------------------------------------------------------

def scenario_from_dict(doc) -> ProblemInstance:
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a JSON object")
    unknown = set(doc) - _SCENARIO_KEYS
    if unknown:
        raise ScenarioError(f"unknown keys {sorted(unknown)}", "scenario")
    for key in ("types", "energy_budget", "time_budget"):
        if key not in doc:
            raise ScenarioError("missing required key", key)
    raw_types = doc["types"]
    if not isinstance(raw_types, list):
        raise ScenarioError("must be an array", "types")
    types = []
    for k, raw in enumerate(raw_types):
        if not isinstance(raw, dict):
            raise ScenarioError(f"entry {k} must be an object", "types")
        bad = set(raw) ^ _TYPE_KEYS
        if bad:
            raise ScenarioError(
                f"entry {k} keys must be exactly {sorted(_TYPE_KEYS)}", "types")
        types.append(SignalType(**raw))
    caps = doc.get("per_type_caps")
    if caps is not None:
        if not isinstance(caps, list):
            raise ScenarioError("must be an array", "per_type_caps")
        caps = tuple(caps)
    return ProblemInstance(
        types=tuple(types),
        energy_budget=doc["energy_budget"],
        time_budget=doc["time_budget"],
        per_type_cap=doc.get("per_type_cap"),
        per_type_caps_override=caps,
        energy_resolution=doc.get("energy_resolution", DEFAULT_ENERGY_RESOLUTION),
        time_resolution=doc.get("time_resolution", DEFAULT_TIME_RESOLUTION),
    )


def load_scenario(text: str) -> ProblemInstance:
    """Parse and validate a JSON scenario document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc}") from exc
    return scenario_from_dict(doc)


def load_scenario_file(path) -> ProblemInstance:
    with open(path, encoding="utf-8") as fh:
        return load_scenario(fh.read())


def scenario_to_dict(instance: ProblemInstance) -> dict:
    doc = {
        "types": [
            {"id": t.id, "quality": t.quality, "energy": t.energy, "time": t.time}
            for t in instance.types
        ],
        "energy_budget": instance.energy_budget,
        "time_budget": instance.time_budget,
        "energy_resolution": instance.energy_resolution,
        "time_resolution": instance.time_resolution,
    }
    if instance.per_type_cap is not None:
        doc["per_type_cap"] = instance.per_type_cap
    if instance.per_type_caps_override is not None:
        doc["per_type_caps"] = list(instance.per_type_caps_override)
    return doc


def render_scenario(instance: ProblemInstance) -> str:
    return json.dumps(scenario_to_dict(instance), indent=2)


def make_instance(quality: Sequence[float], energy: Sequence[float],
                  time: Sequence[float], energy_budget, time_budget,
                  **kwargs) -> ProblemInstance:
    """Build an instance from parallel per-type sequences; ids run from 1."""
    if not len(quality) == len(energy) == len(time):
        raise DimensionError("quality, energy and time must have equal length")
    types = tuple(SignalType(i + 1, q, e, t)
                  for i, (q, e, t) in enumerate(zip(quality, energy, time)))
    return ProblemInstance(types, energy_budget, time_budget, **kwargs)
