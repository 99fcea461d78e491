"""Stage-bounded programs: what "halts by stage s" means here.

Every program is evaluated with a budget.  The answer is either a converged
value or Pending, and once converged it never changes.
"""

from recgraphs import ADD2, LOOP, eval_by, halts_by, list_programs, registry_get, rm_trace

# The canned registry, with what is known about each program.
for p in list_programs():
    print(f"{p.name:16s} {p.ground_truth.summary()}")

# %%
# self5 halts on every input, but only once the budget reaches 5.
self5 = registry_get("self5")
print([halts_by(self5, 7, s) for s in range(8)])

# evens halts on even x at stage x + 3, and never on odd x.
evens = registry_get("evens")
print({x: next((s for s in range(50) if halts_by(evens, x, s)), None) for x in range(8)})

# %%
# Some rule programs also ship a real counter machine.  The two agree.
for x in range(6):
    print(x, eval_by(evens, x, 100), rm_trace(evens.realization, x, 100))

# A counter machine that adds two, and one that never stops.
print(rm_trace(ADD2, 3, 10))
print(rm_trace(LOOP, 3, 10_000))
