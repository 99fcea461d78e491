import json

import numpy as np
import pytest

from recgraphs.codes import encode
from recgraphs.constructions import (
    TreeSpec,
    cycle_ray_H,
    injection_get,
    ray_triangle_H,
    thm1_graph,
    thm2_graph,
    thm4_graph,
    thm5_graph,
    thm6_graph,
    thm7_G,
    thm9_G,
    thm10_G3,
    thm10_G4,
)
from recgraphs.errors import BudgetExhausted, ColoringError, VertexError
from recgraphs.graphs import (
    CycleV,
    FinitePrefix,
    Nat,
    Row,
    SeqV,
    TriEdge,
    edge_at,
    extract,
    from_json,
    is_valid_coloring,
    label,
    prefix,
    to_dot,
    to_json,
)
from recgraphs.registry import registry_get

B = 10_000


def triangle():
    return FinitePrefix.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def constructions():
    reg = registry_get
    trees = [TreeSpec.named(n) for n in ("tree:ray0", "tree:finite(2)", "tree:binary")]
    return {
        "thm1-self5": thm1_graph(reg("self5")),
        "thm1-never": thm1_graph(reg("never")),
        "thm2-evens": thm2_graph(reg("evens")),
        "thm2-cof": thm2_graph(reg("cof-minus-1")),
        "thm4-binary": thm4_graph(reg("tree:binary")),
        "thm4-gap": thm4_graph(reg("notree:gap")),
        "thm5": thm5_graph(injection_get("doubling"), 2),
        "thm6": thm6_graph(TreeSpec.named("tree:binary")),
        "thm7-H": ray_triangle_H(),
        "thm7-G": thm7_G(reg("tree:binary")),
        "thm7-gap": thm7_G(reg("notree:gap")),
        "thm9-H": cycle_ray_H(1),
        "thm9-G": thm9_G([reg("tree:finite(2)"), reg("tree:binary")]),
        "thm10-3": thm10_G3(TreeSpec.named("tree:binary")),
        "thm10-4": thm10_G4(trees),
    }


CONSTRUCTIONS = constructions()


# --- edge oracle ------------------------------------------------------------


def test_self_pair_is_no_edge():
    g = CONSTRUCTIONS["thm1-self5"]
    assert edge_at(g, Nat(7), Nat(7), B) is TriEdge.NO_EDGE


def test_never_has_no_edges():
    assert edge_at(CONSTRUCTIONS["thm1-never"], Nat(0), Nat(5), B) is TriEdge.NO_EDGE


def test_gap_pair_pending():
    g = CONSTRUCTIONS["thm4-gap"]
    assert edge_at(g, SeqV(encode(())), SeqV(encode((0,))), B) is TriEdge.PENDING


def test_foreign_vertex_rejected():
    with pytest.raises(VertexError):
        edge_at(CONSTRUCTIONS["thm1-self5"], Row(0, 0), Nat(1), B)
    with pytest.raises(VertexError):
        edge_at(CONSTRUCTIONS["thm1-self5"], Nat(-1), Nat(1), B)


# --- prefixes ---------------------------------------------------------------------


def test_empty_prefix():
    f = prefix(CONSTRUCTIONS["thm1-self5"], 0, B)
    assert len(f) == 0 and f.decided


def test_self5_prefix_edges():
    f = prefix(CONSTRUCTIONS["thm1-self5"], 8, B)
    assert f.decided
    assert sorted((u.n, v.n) for u, v in f.edge_labels()) == [(5, 6), (5, 7), (6, 7)]


def test_gap_prefix_undecided():
    f = prefix(CONSTRUCTIONS["thm4-gap"], 5, 1000)
    assert not f.decided
    with pytest.raises(BudgetExhausted):
        f.require_decided()


def test_negative_count_rejected():
    with pytest.raises(ValueError):
        prefix(CONSTRUCTIONS["thm1-self5"], -1, B)


@pytest.mark.parametrize("name", sorted(CONSTRUCTIONS))
def test_prefix_consistency(name):
    g = CONSTRUCTIONS[name]
    big = prefix(g, 30, B)
    for c in (0, 1, 5, 12, 29):
        assert prefix(g, c, B) == big.head(c)


@pytest.mark.parametrize("name", sorted(CONSTRUCTIONS))
def test_symmetric_irreflexive(name):
    g = CONSTRUCTIONS[name]
    vs = g.take(20)
    for budget in (0, 3, 50, B):
        for u in vs:
            assert edge_at(g, u, u, budget) is TriEdge.NO_EDGE
            for v in vs:
                assert edge_at(g, u, v, budget) is edge_at(g, v, u, budget)


@pytest.mark.parametrize("name", sorted(CONSTRUCTIONS))
def test_budget_monotone_extraction(name):
    g = CONSTRUCTIONS[name]
    budgets = (0, 1, 2, 4, 8, 16, 64, 640, B)
    fs = [prefix(g, 20, b) for b in budgets]
    for lo, hi in zip(fs, fs[1:]):
        assert set(hi.undecided) <= set(lo.undecided)
        decided_lo = ~_undecided_mask(lo)
        decided_both = decided_lo & ~_undecided_mask(hi)
        assert np.array_equal(lo.adjacency[decided_both], hi.adjacency[decided_both])


def _undecided_mask(f):
    m = np.zeros((len(f), len(f)), dtype=bool)
    for i, j in f.undecided:
        m[i, j] = m[j, i] = True
    return m


def test_extract_arbitrary_vertices():
    g = CONSTRUCTIONS["thm1-self5"]
    f = extract(g, [Nat(9), Nat(7), Nat(2)], B)
    assert f.adjacent(Nat(9), Nat(7)) and not f.adjacent(Nat(2), Nat(9))


# --- FinitePrefix ---------------------------------------------------------------------


def test_prefix_adjacency_read_only():
    f = triangle()
    with pytest.raises(ValueError):
        f.adjacency[0, 1] = False


def test_from_edges_rejects_loops():
    with pytest.raises(ValueError):
        FinitePrefix.from_edges(2, [(0, 0)])


def test_subgraph_keeps_order():
    f = FinitePrefix.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    sub = f.subgraph([Nat(3), Nat(1), Nat(2)])
    assert sub.vertices == (Nat(1), Nat(2), Nat(3))
    assert sub.edges() == [(0, 1), (1, 2)]


# --- colorings -------------------------------------------------------------------------


def test_valid_colorings():
    t = triangle()
    assert is_valid_coloring(t, {Nat(0): 0, Nat(1): 1, Nat(2): 2})
    assert not is_valid_coloring(t, {Nat(0): 0, Nat(1): 1, Nat(2): 1})
    edgeless = FinitePrefix.from_edges(4, [])
    assert is_valid_coloring(edgeless, {Nat(i): 0 for i in range(4)})


def test_coloring_must_be_total():
    with pytest.raises(ColoringError):
        is_valid_coloring(triangle(), {Nat(0): 0})


def test_coloring_needs_decided_prefix():
    with pytest.raises(BudgetExhausted):
        is_valid_coloring(prefix(CONSTRUCTIONS["thm4-gap"], 5, B), {})


# --- labels and export ---------------------------------------------------------------------


def test_labels():
    assert label(Nat(3)) == "3"
    assert label(Row(2, 5)) == "v2,5"
    assert label(SeqV(encode((0, 1, 2)))) == "<0.1.2>"
    assert label(CycleV(1, 1, 0, 4)) == "C1:<0>:0:4"


def test_dot_empty():
    assert to_dot(FinitePrefix.from_edges(0, []), "G") == 'graph "G" {\n}\n'


def test_dot_single_edge():
    text = to_dot(FinitePrefix.from_edges(2, [(0, 1)]))
    assert '"0" -- "1";' in text.splitlines()[3]


def test_dot_undecided_dashed():
    f = FinitePrefix.from_edges(3, [(0, 1)], undecided=[(1, 2)])
    text = to_dot(f)
    assert text.count("style=dashed") == 1
    assert '"1" -- "2" [style=dashed];' in text


def test_dot_quotes_names():
    assert to_dot(FinitePrefix.from_edges(0, []), 'a"b').startswith('graph "a\\"b" {')


def test_json_round_trip():
    f = prefix(CONSTRUCTIONS["thm2-cof"], 12, B)
    g = from_json(to_json(f))
    assert g.vertices == tuple(label(v) for v in f.vertices)
    assert np.array_equal(g.adjacency, f.adjacency)
    assert json.loads(to_json(f))["undecided"] == []


def test_json_keeps_undecided():
    f = prefix(CONSTRUCTIONS["thm4-gap"], 5, B)
    assert len(from_json(to_json(f)).undecided) == len(f.undecided)


@pytest.mark.parametrize(
    "text",
    ['{"edges": []}', '{"vertices": ["a"], "edges": [[0, 3]]}', '{"vertices": ["a", "b"], "edges": [[1, 1]]}', "[1]"],
)
def test_json_malformed(text):
    with pytest.raises(ValueError):
        from_json(text)
