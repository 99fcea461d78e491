"""Exact solvers checked against brute force on random small graphs."""

import numpy as np

from recgraphs import (
    chromatic_number,
    exhaustive_colorings,
    exhaustive_embedding,
    k_colorable,
    random_prefix,
    run_suite,
    subgraph_embedding,
)

rng = np.random.default_rng(7)
graphs = [random_prefix(rng, int(rng.integers(1, 7))) for _ in range(50)]

agree = sum(
    (k_colorable(f, k) is not None) == (exhaustive_colorings(f, k) > 0)
    for f in graphs
    for k in range(1, 5)
)
print(f"coloring: {agree}/200 agree")

pairs = [(random_prefix(rng, 3), random_prefix(rng, 6)) for _ in range(50)]
agree = sum((subgraph_embedding(h, g) is not None) == (exhaustive_embedding(h, g) is not None) for h, g in pairs)
print(f"embedding: {agree}/50 agree")

# %%
# Larger instances are out of reach for brute force but fine for the solver.
big = random_prefix(rng, 60, 0.15)
print(chromatic_number(big))

# %%
# The packaged property suites, as run by `recgraphs check`.
for rep in run_suite("solvers", seed=7):
    print(rep.to_text())
