"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line with its runtime, and
fails if the criterion does not hold or takes 10 seconds or more.  Run as a
script (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

from __future__ import annotations

import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from recgraphs.checks import random_prefix, thm10_separator, thm5_separator, triangles
from recgraphs.codes import (
    TriValue,
    decode,
    encode,
    eta_eval,
    is_prefix,
    pairwise_comparable,
    prefixes,
)
from recgraphs.constructions import (
    TreeSpec,
    cycle_length,
    cycle_ray_H,
    injection_get,
    ray_triangle_H,
    thm1_graph,
    thm2_graph,
    thm4_graph,
    thm4_witness_coloring,
    thm5_graph,
    thm6_graph,
    thm7_G,
    thm9_exact,
    thm9_G,
    thm9_window,
    thm10_G3,
)
from recgraphs.graphs import CycleV, Row, SeqV, Special, TriEdge, edge_at, extract, is_valid_coloring, prefix
from recgraphs.machine import Converged, eval_by
from recgraphs.registry import list_programs, registry_get
from recgraphs.solvers import (
    chromatic_number,
    component_of,
    exhaustive_colorings,
    exhaustive_embedding,
    has_clique,
    independent_set,
    is_embedding,
    is_independent,
    iter_colorings,
    k_colorable,
    subgraph_embedding,
)

B = 10_000
TIME_LIMIT = 10.0


@pytest.fixture
def criterion(capsys):
    """Context manager factory that times a criterion and prints its verdict."""

    def emit(line: str) -> None:
        with capsys.disabled():
            print(line, flush=True)

    return lambda number, title: _criterion(number, title, emit)


@contextmanager
def _criterion(number: int, title: str, emit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        slow = elapsed >= TIME_LIMIT
        mark = "PASS" if ok and not slow else "FAIL"
        note = " (over time limit)" if slow else ""
        emit(f"\n[{mark}] criterion {number:2d}: {title} -- {elapsed:.2f}s{note}")
    assert elapsed < TIME_LIMIT


# --- 1 ----------------------------------------------------------------------------


def test_criterion_01_thm1(criterion):
    with criterion(1, "thm1: never edgeless and 1-colorable; self5 7-clique, not 3-colorable from 9 on"):
        never = thm1_graph(registry_get("never"))
        for c in range(1, 21):
            f = prefix(never, c, B)
            assert f.decided and f.edges() == []
            assert k_colorable(f, 1) is not None
        self5 = thm1_graph(registry_get("self5"))
        f12 = prefix(self5, 12, B)
        clique = has_clique(f12, 7)
        assert clique is not None and [v.n for v in clique] == list(range(5, 12))
        for c in range(9, 21):
            assert k_colorable(prefix(self5, c, B), 3) is None


# --- 2 ----------------------------------------------------------------------------


def test_criterion_02_thm2(criterion):
    with criterion(2, "thm2: cof-minus-1 chi >= m+1 and growing; evens component rows <= 1, chi = 2"):
        g = thm2_graph(registry_get("cof-minus-1"))
        # the diagonal prefix through m + j = 16 covers every Row(m, j) with m, j <= 8
        f = prefix(g, 17 * 17, B)
        assert all(f.has_vertex(Row(m, j)) for m in range(9) for j in range(9))
        chis = [chromatic_number(f.subgraph(component_of(f, Row(m, 0)))) for m in range(3, 7)]
        assert all(chi >= m + 1 for chi, m in zip(chis, range(3, 7))), chis
        assert chis == sorted(chis), chis
        # growth with m shows up across windows: rows 3..6 share one component,
        # and its chromatic number rises as rows with larger m enter the window
        grow = []
        for bound in (4, 6, 8):
            w = prefix(g, (2 * bound + 1) ** 2, B)
            grow.append(chromatic_number(w.subgraph(component_of(w, Row(3, 0)))))
        assert grow == [4, 6, 8], grow

        e = prefix(thm2_graph(registry_get("evens")), 17 * 17, B)
        comp = component_of(e, Row(0, 0))
        assert not any(isinstance(v, Row) and v.m > 1 for v in comp)
        assert any(isinstance(v, Row) and v.m == 1 for v in comp)
        assert chromatic_number(e.subgraph(comp)) == 2


# --- 3 ----------------------------------------------------------------------------


def test_criterion_03_eta(criterion):
    with criterion(3, "eta: total on tree:binary and tree:desc, Pending witness <0> for notree:gap, stable"):
        for name in ("tree:binary", "tree:desc"):
            p = registry_get(name)
            b = p.sufficient_budget
            for c in range(201):
                tau = decode(c)
                v = eta_eval(p, tau, b)
                assert v is not TriValue.PENDING, (name, c)
                member = all(eval_by(p, encode(s), b) == Converged(1) for s in prefixes(tau))
                assert (v is TriValue.ONE) == member, (name, c)
        gap = registry_get("notree:gap")
        assert encode((0,)) <= 10
        assert all(eta_eval(gap, (0,), b) is TriValue.PENDING for b in range(10_001))
        for p in list_programs():
            for c in range(0, 40, 3):
                for b in (0, 2, 5, 20, 64):
                    v = eta_eval(p, decode(c), b)
                    if v is not TriValue.PENDING:
                        assert all(eta_eval(p, decode(c), b2) is v for b2 in range(b, b + 101))
        seqs = [decode(c) for c in range(2000) if len(decode(c)) <= 5 and max(decode(c), default=0) <= 5]
        assert all(decode(encode(s)) == s for s in seqs)
        assert all(encode(s) < encode(t) for t in seqs for s in prefixes(t) if s != t)


# --- 4 ----------------------------------------------------------------------------


def test_criterion_04_thm4(criterion):
    with criterion(4, "thm4: binary witness valid with >= 4 zeros; finite(3) zero sets are chains <= 4"):
        binary = registry_get("tree:binary")
        f = prefix(thm4_graph(binary), 30, B)
        chi = thm4_witness_coloring(binary, 30)
        assert is_valid_coloring(f, chi)
        assert sum(1 for c in chi.values() if c == 0) >= 4

        t = TreeSpec.named("tree:finite(3)")
        f12 = prefix(thm4_graph(t.program), 12, B)
        assert f12.decided
        nodes = f12.subgraph([v for v in f12.vertices if t.member_code(v.code)])
        count = 0
        for col in iter_colorings(nodes, 4):
            count += 1
            zero = [v.seq for v, c in col.items() if c == 0]
            assert pairwise_comparable(zero) and len(zero) <= 4
        assert count > 0


# --- 5 ----------------------------------------------------------------------------


def test_criterion_05_thm5(criterion):
    with criterion(5, "thm5: doubling n=2 has an 8-clique, n=3 is 2-colorable, separator matches"):
        g = injection_get("doubling")
        f = prefix(thm5_graph(g, 2), 9, B)
        assert has_clique(f, 8) is not None and k_colorable(f, 3) is None
        for c in range(21):
            assert k_colorable(prefix(thm5_graph(g, 3), c, B), 2) is not None
        ns = list(range(11))
        assert thm5_separator(g, ns) == [0 if n % 2 == 0 else 1 for n in ns]


# --- 6 ----------------------------------------------------------------------------


def test_criterion_06_thm6(criterion):
    with criterion(6, "thm6: edges are incomparability; binary depth 4 has a 5-chain; finite(2) none of 4"):
        binary = TreeSpec.named("tree:binary")
        g = thm6_graph(binary)
        members = [c for c in range(101) if binary.member_code(c)]
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                sa, sb = decode(a), decode(b)
                want = not (is_prefix(sa, sb) or is_prefix(sb, sa))
                assert (edge_at(g, SeqV(a), SeqV(b), B) is TriEdge.EDGE) == want
        nodes = [SeqV(encode(s)) for s in binary.nodes(4, branch=2)]
        f = extract(g, nodes, B)
        chain = independent_set(f, 5)
        assert chain is not None and is_independent(f, chain)

        fin = TreeSpec.named("tree:finite(2)")
        ff = prefix(thm6_graph(fin), 100, B)
        assert len(ff) == 7
        assert independent_set(ff, 4) is None


# --- 7 ----------------------------------------------------------------------------


def test_criterion_07_thm7(criterion):
    with criterion(7, "thm7: triangle+5-ray embeds for ray0 onto the unique triangle, not for finite(2); gap undecided"):
        h = prefix(ray_triangle_H(), 8, B)
        g = prefix(thm7_G(registry_get("tree:ray0")), 15, B)
        emb = subgraph_embedding(h, g)
        assert emb is not None and is_embedding(h, g, emb)
        tris = triangles(g)
        assert len(tris) == 1
        unique = {g.vertices[i] for i in tris[0]}
        assert unique == {Special(0), Special(1), Special(2)}
        assert {emb[v] for v in h.vertices[:3]} == unique

        fin = TreeSpec.named("tree:finite(2)")
        gf = prefix(thm7_G(fin.program), 3 + fin.code_bound + 1, B)
        assert all(gf.has_vertex(SeqV(c)) for c in fin.codes())
        assert subgraph_embedding(h, gf) is None

        gap = thm7_G(registry_get("notree:gap"))
        assert all(not prefix(gap, c, B).decided for c in range(5, 16))


# --- 8 ----------------------------------------------------------------------------


def test_criterion_08_thm9(criterion):
    with criterion(8, "thm9: cycle sizes 2(e+1)+2, exactness unique, hexagon ray embeds at e=1 only, spurious isolated"):
        assert [cycle_length(e) for e in (0, 1, 2)] == [4, 6, 8]
        for e in (0, 1, 2):
            f = prefix(cycle_ray_H(e), 3 + 3 * cycle_length(e), 0)
            for k in range(3):
                assert sum(1 for v in f.vertices if isinstance(v, CycleV) and v.k == k) == cycle_length(e)

        for name in ("tree:binary", "tree:ray0", "tree:finite(2)", "tree:desc", "notree:gap", "partial:slow"):
            p = registry_get(name)
            for c in range(1, 31):
                assert sum(thm9_exact(p, decode(c), k) for k in range(65)) <= 1

        binary = registry_get("tree:binary")
        progs = [registry_get("tree:finite(2)"), binary, binary]
        g = thm9_G(progs)
        h1 = prefix(cycle_ray_H(1), 3 + 3 * cycle_length(1), 0)
        w1 = extract(g, thm9_window(1, 4, 6), B)
        for key in {(v.code, v.k) for v in w1.vertices if isinstance(v, CycleV)}:
            assert sum(1 for v in w1.vertices if isinstance(v, CycleV) and (v.code, v.k) == key) == 6
        emb = subgraph_embedding(h1, w1)
        assert emb is not None and is_embedding(h1, w1, emb)
        w2 = extract(g, thm9_window(2, 4, 6), B)
        assert subgraph_embedding(h1, w2) is None

        w = extract(g, thm9_window(1, 6, 8), B)
        for i, v in enumerate(w.vertices):
            if isinstance(v, CycleV) and not thm9_exact(binary, decode(v.code), v.k):
                for j in w.neighbors(i):
                    u = w.vertices[j]
                    assert isinstance(u, CycleV) and (u.code, u.k) == (v.code, v.k)


# --- 9 ----------------------------------------------------------------------------


def test_criterion_09_thm10(criterion):
    with criterion(9, "thm10: thm10_G3(ray0) and ray_triangle_H mutually embeddable; G4 separator [1, 0, 1]"):
        ray0 = TreeSpec.named("tree:ray0")
        for n in (5, 8, 10):
            h = prefix(ray_triangle_H(), n, B)
            g = prefix(thm10_G3(ray0), n, B)
            assert subgraph_embedding(h, g) is not None
            assert subgraph_embedding(g, h) is not None
        trees = [TreeSpec.named(n) for n in ("tree:ray0", "tree:finite(2)", "tree:binary")]
        got = thm10_separator(trees)
        truth = [int(t.program.ground_truth.tree.name == "INFINITE_PATH") for t in trees]
        assert got == truth == [1, 0, 1]


# --- 10 ---------------------------------------------------------------------------


def test_criterion_10_solver_oracles(criterion):
    with criterion(10, "solvers: k_colorable and subgraph_embedding agree with exhaustive oracles, 300 cases"):
        rng = np.random.default_rng(20261016)
        cases = disagreements = 0
        for _ in range(200):
            f = random_prefix(rng, int(rng.integers(1, 7)))
            cases += 1
            for k in range(1, 5):
                col = k_colorable(f, k)
                if (col is not None) != (exhaustive_colorings(f, k) > 0):
                    disagreements += 1
                elif col is not None and not is_valid_coloring(f, col):
                    disagreements += 1
        for _ in range(100):
            h = random_prefix(rng, int(rng.integers(1, 5)))
            g = random_prefix(rng, int(rng.integers(1, 7)))
            cases += 1
            emb = subgraph_embedding(h, g)
            if (emb is not None) != (exhaustive_embedding(h, g) is not None):
                disagreements += 1
            elif emb is not None and not is_embedding(h, g, emb):
                disagreements += 1
        assert cases == 300
        assert disagreements == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
