"""Independent re-optimisation of a schedule of instances, one per epoch.

Nothing carries over between epochs: each one is solved on its own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ScenarioError, SigmixError
from .model import ProblemInstance, Solution, scenario_from_dict
from .solvers import get_solver


class EpochError(SigmixError):
    """A failure while solving one epoch; `cause` is the original error."""

    def __init__(self, label, cause):
        self.label = label
        self.cause = cause
        super().__init__(f"epoch {label!r}: {cause}")


@dataclass(frozen=True)
class EpochSchedule:
    epochs: tuple[tuple[str, ProblemInstance], ...]

    def __post_init__(self):
        epochs = tuple((str(label), inst) for label, inst in self.epochs)
        if not epochs:
            raise ScenarioError("at least one epoch is required", "schedule")
        labels = [label for label, _ in epochs]
        if len(set(labels)) != len(labels):
            raise ScenarioError(f"epoch labels must be unique, got {labels}",
                                "schedule")
        object.__setattr__(self, "epochs", epochs)

    def __len__(self):
        return len(self.epochs)


def load_schedule(text: str) -> EpochSchedule:
    """Parse a JSON array of ``{"label": ..., "scenario": {...}}`` objects."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise ScenarioError("schedule must be a JSON array", "schedule")
    epochs = []
    for k, item in enumerate(doc):
        if not isinstance(item, dict) or set(item) != {"label", "scenario"}:
            raise ScenarioError(
                f"entry {k} must have exactly the keys 'label' and 'scenario'",
                "schedule")
        try:
            inst = scenario_from_dict(item["scenario"])
        except ScenarioError as exc:
            raise ScenarioError(f"epoch {item['label']!r}: {exc}") from exc
        epochs.append((item["label"], inst))
    return EpochSchedule(tuple(epochs))


def plan_epochs(schedule: EpochSchedule, solver="exact") -> list[tuple[str, Solution]]:
    solve = get_solver(solver)
    out = []
    for label, inst in schedule.epochs:
        try:
            out.append((label, solve(inst)))
        except SigmixError as exc:
            raise EpochError(label, exc) from exc
    return out
