"""
Sweeping energy and compute time
================================

Make energy grow linearly with quality, or compute time shrink inversely
with it, and watch the best achievable quality fall.
"""

# %%
from sigmix import SweepSpec, builtin_scenario, run_sweep
from sigmix.sweep import format_table, sweep_to_csv

base = builtin_scenario("basic_case")

# %%
# Energy per signal = factor x quality.
energy = run_sweep(SweepSpec(base, "energy-linear", (5, 10, 20, 30, 40)))
print(format_table(energy))

# %%
# Several columns have more than one optimal mix; the solver reports the one
# using least energy, then least time.  The CSV form is ready for plotting.
print(sweep_to_csv(energy))

# %%
# Compute time per signal = factor / quality.
timing = run_sweep(SweepSpec(base, "time-inverse", (25, 50, 100, 150, 200)))
print(format_table(timing))
