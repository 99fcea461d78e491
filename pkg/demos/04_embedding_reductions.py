"""Graph families whose embeddings encode whether a tree has an infinite path."""

from recgraphs import (
    TreeSpec,
    cycle_ray_H,
    extract,
    independent_set,
    prefix,
    ray_triangle_H,
    registry_get,
    subgraph_embedding,
    thm6_graph,
    thm7_G,
    thm9_G,
    thm9_window,
    thm10_G4,
    thm10_separator,
    encode,
    SeqV,
)

B = 10_000

# %%
# thm6: vertices are tree nodes, edges join incomparable nodes.
# A chain of nodes is an independent set.
binary = TreeSpec.named("tree:binary")
f = extract(thm6_graph(binary), [SeqV(encode(s)) for s in binary.nodes(4, branch=2)], B)
print(independent_set(f, 5))

# %%
# thm7: a triangle with a ray fits into the tree graph only if the tree is deep enough.
h = prefix(ray_triangle_H(), 8, B)
for name, count in [("tree:ray0", 15), ("tree:finite(2)", 16)]:
    g = prefix(thm7_G(registry_get(name)), count, B)
    print(name, subgraph_embedding(h, g) is not None)

# Non-trees leave pairs undecided.
print(prefix(thm7_G(registry_get("notree:gap")), 6, B).undecided)

# %%
# thm9: cycles of size 2(e+1)+2 replace nodes, so component e only accepts copies of H(e).
progs = [registry_get(n) for n in ("tree:finite(2)", "tree:binary", "tree:binary")]
g = thm9_G(progs)
h1 = prefix(cycle_ray_H(1), 3 + 3 * 6, 0)
for e in (1, 2):
    print(e, subgraph_embedding(h1, extract(g, thm9_window(e, 4, 6), B)) is not None)

# %%
# thm10: one component per tree; the separator reads off which trees are ill-founded.
trees = [TreeSpec.named(n) for n in ("tree:ray0", "tree:finite(2)", "tree:binary")]
print(thm10_separator(trees))
print(prefix(thm10_G4(trees), 8, 0).vertices)
