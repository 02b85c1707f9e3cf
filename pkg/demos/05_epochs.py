"""
Re-optimising as conditions change
==================================

When costs drift over time, each epoch is simply solved again from scratch.
"""

# %%
from sigmix import data_path, load_schedule, plan_epochs

schedule = load_schedule(data_path("energy_epochs.json").read_text())
for label, sol in plan_epochs(schedule):
    print(f"{label:>6}: counts {sol.mix.counts}  quality {sol.quality:g}")
