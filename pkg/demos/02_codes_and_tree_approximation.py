"""Coding finite sequences, and reading trees off programs.

A program describes a tree through the values it gives on sequence codes.
The tree approximation eta answers One (in the tree), Zero (out) or Pending,
and a program that is not a tree can leave some node Pending forever.
"""

from recgraphs import TreeSpec, TriValue, decode, encode, eta_eval, registry_get, seq_str

for seq in [(), (0,), (1,), (0, 0), (0, 1), (1, 1), (5, 4, 3, 2)]:
    print(f"<{seq_str(seq)}> -> {encode(seq)}")
print([seq_str(decode(c)) for c in range(12)])

# %%
binary = registry_get("tree:binary")
for tau in [(0, 1), (2,), (2, 0), (1, 1, 0)]:
    print(seq_str(tau), eta_eval(binary, tau, 64))

# eta needs budget: <0> first converges at budget 2.
print([eta_eval(binary, (0,), b) for b in range(4)])

# %%
# notree:gap maps <> to 0 but <0> to 1, so <0> stays Pending at every budget.
gap = registry_get("notree:gap")
print(all(eta_eval(gap, (0,), b) is TriValue.PENDING for b in range(10_001)))

# %%
# Member codes of a finite tree, and the first members of the all-zeros ray.
print(list(TreeSpec.named("tree:finite(2)").codes()))
ray = TreeSpec.named("tree:ray0").codes()
print([next(ray) for _ in range(7)])
