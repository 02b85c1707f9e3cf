"""
Limiting signals per type
=========================

With generous budgets the optimum piles onto the best type.  A cap on the
number of signals of any one type forces the mix to spread out.
"""

# %%
from dataclasses import replace

from sigmix import builtin_scenario, solve_exact

inst = builtin_scenario("cap_study_uncapped")
for cap in (None, 30, 20, 10):
    sol = solve_exact(replace(inst, per_type_cap=cap))
    print(f"cap {str(cap):>4}: counts {sol.mix.counts}  quality {sol.quality:g}")

# %%
# Caps can also differ per type.
sol = solve_exact(replace(inst, per_type_caps_override=(40, 40, 5)))
print("caps (40, 40, 5):", sol.mix.counts, sol.quality)
