"""
Greedy heuristic versus exact search
====================================

The heuristic ranks types by quality / (energy x time) and fills them in
that order.  On the four- and seven-type test sets it finds the optimum;
on other instances it can fall short.
"""

# %%
from sigmix import (builtin_scenario, make_instance, run_benchmark,
                    solve_exact, solve_greedy, type_score)
from sigmix.bench import format_table

seven = builtin_scenario("seven_types")
for t in sorted(seven.types, key=type_score, reverse=True):
    print(f"type {t.id}: score {type_score(t):.5f}")

# %%
for name in ("four_types", "seven_types"):
    inst = builtin_scenario(name)
    print(name, "exact", solve_exact(inst).quality, "greedy", solve_greedy(inst).quality)

# %%
# A case where the ranking misleads: one type-1 signal blocks two type-2 ones.
trap = make_instance([5, 3], [4, 3], [1, 1], 6, 100)
print("greedy", solve_greedy(trap).mix.counts, solve_greedy(trap).quality)
print("exact ", solve_exact(trap).mix.counts, solve_exact(trap).quality)

# %%
# Timing: twenty sequential trials per solver, solve call only.
reports = [run_benchmark(builtin_scenario(n), ["exact", "greedy"], 20, label=n)
           for n in ("four_types", "seven_types")]
print(format_table(reports))
