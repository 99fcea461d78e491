"""Graph families whose colorability encodes a property of a program."""

from recgraphs import (
    Row,
    chromatic_number,
    component_of,
    has_clique,
    injection_get,
    is_valid_coloring,
    k_colorable,
    prefix,
    registry_get,
    thm1_graph,
    thm2_graph,
    thm4_graph,
    thm4_witness_coloring,
    thm5_graph,
    to_dot,
)

B = 10_000

# %%
# thm1: if the program halts on its own input, all late vertices form a clique.
f = prefix(thm1_graph(registry_get("self5")), 12, B)
print(has_clique(f, 7))
print(k_colorable(f, 3))
print(prefix(thm1_graph(registry_get("never")), 12, B).edges())

# %%
# thm2: the ladder between rows m and m+1 fills in when the program halts on m.
g = thm2_graph(registry_get("evens"))
f = prefix(g, 17 * 17, B)
comp = component_of(f, Row(0, 0))
print(sorted({v.m for v in comp if isinstance(v, Row)}), chromatic_number(f.subgraph(comp)))

# %%
# thm4: an infinite path lets every path node share color 0.
binary = registry_get("tree:binary")
chi = thm4_witness_coloring(binary, 30)
print(is_valid_coloring(prefix(thm4_graph(binary), 30, B), chi))
print(sorted(str(v) for v, c in chi.items() if c == 0))

# %%
# thm5: n=2 is hit by the doubling map, so chords appear; n=3 stays a path.
doubling = injection_get("doubling")
print(has_clique(prefix(thm5_graph(doubling, 2), 9, B), 8) is not None)
print(to_dot(prefix(thm5_graph(doubling, 3), 5, B), "thm5[doubling,3]"))
