"""
Choosing a signal mix
=====================

Three signal types with increasing quality per signal, an energy budget of
1000 and a compute-time budget of 25 microseconds.  How many signals of each
type should be sent?
"""

# %%
from sigmix import builtin_scenario, evaluate_mix, solve_exact, upper_bound
from sigmix.exact import root_node

inst = builtin_scenario("basic_case")
for t in inst.types:
    print(f"type {t.id}: quality {t.quality:g}, energy {t.energy:g}, time {t.time:g} us")

# %%
# The exact solver searches integer counts with branch-and-bound.
sol = solve_exact(inst)
print("counts:", sol.mix.counts)
print("quality:", sol.totals.quality, "energy:", sol.totals.energy, "time:", sol.totals.time)
print("nodes explored:", sol.nodes_explored)

# %%
# The bound at the root is what the fractional relaxations promise; the
# integer optimum sits just under it.
print("root bound:", upper_bound(root_node(inst), inst))

# %%
# Any mix can be scored directly.  Spending the whole energy budget on
# type 2 is feasible but worse.
print(evaluate_mix(inst, (0, 5, 0)))

# %%
# With only the best type available, three signals is all the energy allows.
only_third = builtin_scenario("single_type")
print("single type:", solve_exact(only_third).mix.counts, solve_exact(only_third).quality)
