"""Property suites over certified instances, one per construction.

Each suite returns a :class:`CheckReport`; ``run_suite("all")`` runs every
suite.  The CLI ``check`` command only prints these reports.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from .codes import TriValue, decode, encode, eta_eval, is_prefix, pairwise_comparable
from .constructions import (
    InjectionSpec,
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
    thm10_G4,
    thm10_G4_window,
)
from .graphs import (
    CycleV,
    FinitePrefix,
    Nat,
    Row,
    SeqV,
    Special,
    TriEdge,
    edge_at,
    extract,
    is_valid_coloring,
    prefix,
)
from .machine import Converged, eval_by, halts_by
from .registry import list_programs, registry_get
from .solvers import (
    chromatic_number,
    component_of,
    exhaustive_colorings,
    exhaustive_embedding,
    has_clique,
    independent_set,
    is_clique,
    is_embedding,
    is_independent,
    iter_colorings,
    k_colorable,
    subgraph_embedding,
)

__all__ = [
    "DEFAULT_BUDGET",
    "PropertyResult",
    "CheckReport",
    "SUITES",
    "run_suite",
    "thm2_diagonal_count",
    "thm5_separator",
    "thm10_separator",
    "random_prefix",
    "triangles",
]

DEFAULT_BUDGET = 10_000
# stage bound for the exactness uniqueness scan; covers partial:slow up to length 5
EXACT_K_BOUND = 64


@dataclass(frozen=True)
class PropertyResult:
    id: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    suite: str
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def check(self, pid: str, fn: Callable[[], tuple[bool, str] | bool]) -> None:
        try:
            out = fn()
        except Exception as exc:  # a crash is a failed property, reported not raised
            self.results.append(PropertyResult(pid, False, f"{type(exc).__name__}: {exc}"))
            return
        ok, detail = out if isinstance(out, tuple) else (out, "")
        self.results.append(PropertyResult(pid, bool(ok), detail))

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            mark = "pass" if r.passed else "FAIL"
            lines.append(f"  [{mark}] {r.id}" + (f" -- {r.detail}" if r.detail else ""))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "results": [asdict(r) for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# shared helpers


def thm2_diagonal_count(bound: int) -> int:
    """Prefix length of ``thm2_graph`` covering every ``Row(m, j)`` with ``m, j <= bound``.

    Diagonal ``d`` holds ``2d + 1`` vertices, so diagonals ``0..2*bound`` hold
    ``(2*bound + 1)**2``.
    """
    return (2 * bound + 1) ** 2


def thm5_separator(g: InjectionSpec, ns: Sequence[int], count: int = 12) -> list[int]:
    """``s(n) = 1`` iff the ``count``-vertex prefix of ``thm5_graph(g, n)`` is 3-colorable."""
    return [int(k_colorable(prefix(thm5_graph(g, n), count, 0), 3) is not None) for n in ns]


def thm10_separator(trees: Sequence[TreeSpec], cycles: int = 3, depth: int = 3) -> list[int]:
    """``s(n) = 1`` iff a ``cycles``-cycle truncation of ``cycle_ray_H(n)`` embeds into
    the depth-``depth`` truncation of component ``n`` of ``thm10_G4(trees)``."""
    g = thm10_G4(trees)
    out = []
    for n in range(len(trees)):
        h = prefix(cycle_ray_H(n), 3 + cycles * cycle_length(n), 0)
        window = extract(g, thm10_G4_window(trees, n, depth, branch=2), 0)
        out.append(int(subgraph_embedding(h, window) is not None))
    return out


def random_prefix(rng: np.random.Generator, n: int, density: float | None = None) -> FinitePrefix:
    if density is None:
        density = float(rng.uniform(0.1, 0.9))
    upper = np.triu(rng.random((n, n)) < density, 1)
    return FinitePrefix.from_edges(n, [(int(i), int(j)) for i, j in zip(*np.nonzero(upper))])


def triangles(f: FinitePrefix) -> list[tuple[int, int, int]]:
    out = []
    for i, j in f.edges():
        for k in range(j + 1, len(f)):
            if f.adjacency[i, k] and f.adjacency[j, k]:
                out.append((i, j, k))
    return out


def _ok(cond: bool, detail: str = "") -> tuple[bool, str]:
    return bool(cond), detail


# ---------------------------------------------------------------------------
# suites


def suite_thm1(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm1")
    never, self5 = registry_get("never"), registry_get("self5")
    B = DEFAULT_BUDGET

    def never_edgeless():
        bad = [c for c in range(1, 21) if prefix(thm1_graph(never), c, B).edges()]
        return _ok(not bad, f"counts with edges: {bad}")

    def never_1_colorable():
        bad = [c for c in range(1, 21) if k_colorable(prefix(thm1_graph(never), c, B), 1) is None]
        return _ok(not bad, f"counts not 1-colorable: {bad}")

    def self5_clique():
        found = has_clique(prefix(thm1_graph(self5), 12, B), 7)
        return _ok(found is not None and [v.n for v in found] == list(range(5, 12)), str(found))

    def self5_not_3_colorable():
        bad = [c for c in range(9, 21) if k_colorable(prefix(thm1_graph(self5), c, B), 3)]
        return _ok(not bad, f"3-colorable at counts {bad}")

    def edge_depends_on_min():
        g = thm1_graph(self5)
        return all(
            edge_at(g, Nat(m), Nat(n), B) == edge_at(g, Nat(m), Nat(m + 1), B)
            for m in range(20)
            for n in range(m + 1, 21)
        )

    rep.check("never: prefixes 1..20 edgeless", never_edgeless)
    rep.check("never: prefixes 1..20 1-colorable", never_1_colorable)
    rep.check("self5: prefix(12) has the 7-clique {5..11}", self5_clique)
    rep.check("self5: prefixes 9..20 not 3-colorable", self5_not_3_colorable)
    rep.check("edge(m,n) depends only on min(m,n)", edge_depends_on_min)
    return rep


def suite_thm2(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm2")
    cof, evens = registry_get("cof-minus-1"), registry_get("evens")
    B = DEFAULT_BUDGET
    big = prefix(thm2_graph(cof), thm2_diagonal_count(8), B)

    def chrom_rows():
        chis = [chromatic_number(big.subgraph(component_of(big, Row(m, 0)))) for m in range(3, 7)]
        ok = all(c >= m + 1 for c, m in zip(chis, range(3, 7)))
        ok = ok and all(a <= b for a, b in zip(chis, chis[1:]))
        return _ok(ok, f"chi for m=3..6: {chis}")

    def chrom_grows_with_window():
        chis = []
        for bound in (4, 6, 8):
            f = prefix(thm2_graph(cof), thm2_diagonal_count(bound), B)
            chis.append(chromatic_number(f.subgraph(component_of(f, Row(3, 0)))))
        return _ok(all(a < b for a, b in zip(chis, chis[1:])), f"chi at bounds 4,6,8: {chis}")

    f_ev = prefix(thm2_graph(evens), thm2_diagonal_count(8), B)
    comp = component_of(f_ev, Row(0, 0))

    def evens_rows():
        rows = sorted({v.m for v in comp if isinstance(v, Row)})
        return _ok(max(rows) <= 1, f"rows in component: {rows}")

    def evens_chrom():
        chi = chromatic_number(f_ev.subgraph(comp))
        return _ok(chi == 2, f"chi = {chi}")

    def degree_bound():
        deg = big.degrees()
        bad = [
            str(v)
            for i, v in enumerate(big.vertices)
            if isinstance(v, Row) and deg[i] > 4 + v.m + 1
        ]
        return _ok(not bad, f"over bound: {bad[:5]}")

    rep.check("cof-minus-1: chi(component of Row(m,0)) >= m+1, nondecreasing, m=3..6", chrom_rows)
    rep.check("cof-minus-1: chi(component of Row(3,0)) grows with the window", chrom_grows_with_window)
    rep.check("evens: component of Row(0,0) stays in rows 0..1", evens_rows)
    rep.check("evens: component of Row(0,0) has chromatic number 2", evens_chrom)
    rep.check("degree of Row(m,j) <= m+5", degree_bound)
    return rep


def suite_eta(seed: int = 0) -> CheckReport:
    rep = CheckReport("eta")
    gap = registry_get("notree:gap")

    def totality(name):
        def run():
            p = registry_get(name)
            b = p.sufficient_budget
            bad = []
            for c in range(201):
                v = eta_eval(p, decode(c), b)
                raw = eval_by(p, c, b)
                member = raw == Converged(1) and all(
                    eval_by(p, encode(decode(c)[:i]), b) == Converged(1) for i in range(len(decode(c)))
                )
                if v is TriValue.PENDING or (v is TriValue.ONE) != member:
                    bad.append(c)
            return _ok(not bad, f"bad codes: {bad[:10]}")

        return run

    def gap_pending():
        bad = [b for b in range(10_001) if eta_eval(gap, (0,), b) is not TriValue.PENDING]
        return _ok(not bad, f"converged at budgets {bad[:5]}")

    def stability():
        bad = []
        for p in list_programs():
            for c in range(0, 40, 3):
                for b in (0, 1, 2, 3, 5, 8, 20, 60):
                    v = eta_eval(p, decode(c), b)
                    if v is TriValue.PENDING:
                        continue
                    if any(eta_eval(p, decode(c), b2) is not v for b2 in range(b, b + 101)):
                        bad.append((p.name, c, b))
        return _ok(not bad, f"unstable: {bad[:5]}")

    def monotone_halting():
        bad = []
        for p in list_programs():
            for x in range(0, 51, 5):
                states = [halts_by(p, x, s) for s in range(201)]
                if any(a and not b for a, b in zip(states, states[1:])):
                    bad.append((p.name, x))
        return _ok(not bad, f"non-monotone: {bad}")

    rep.check("eta total on tree:binary codes <= 200, ONE exactly on members", totality("tree:binary"))
    rep.check("eta total on tree:desc codes <= 200, ONE exactly on members", totality("tree:desc"))
    rep.check("notree:gap: eta(<0>) Pending at every budget <= 10^4", gap_pending)
    rep.check("eta values stable over the next 100 budgets", stability)
    rep.check("halts_by monotone in the stage", monotone_halting)
    return rep


def suite_thm4(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm4")
    B = DEFAULT_BUDGET
    binary = registry_get("tree:binary")

    def witness():
        f = prefix(thm4_graph(binary), 30, B)
        chi = thm4_witness_coloring(binary, 30)
        zeros = sum(1 for c in chi.values() if c == 0)
        return _ok(is_valid_coloring(f, chi) and zeros >= 4, f"zero count {zeros}")

    def chain_property():
        t = TreeSpec.named("tree:finite(3)")
        f = prefix(thm4_graph(t.program), 12, B)
        if not f.decided:
            return _ok(False, "prefix undecided")
        members = f.subgraph([v for v in f.vertices if t.member_code(v.code)])
        n_col, bad = 0, 0
        for col in iter_colorings(members, 4):
            n_col += 1
            zero = [v.seq for v, c in col.items() if c == 0]
            if not pairwise_comparable(zero) or len(zero) > 4:
                bad += 1
        return _ok(n_col > 0 and bad == 0, f"{n_col} colorings of {len(members)} members, {bad} bad")

    rep.check("tree:binary: witness coloring of prefix(30) valid, color 0 used >= 4 times", witness)
    rep.check("tree:finite(3): every 4-coloring's zero set is a chain of size <= 4", chain_property)
    return rep


def suite_thm5(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm5")
    g = injection_get("doubling")

    def clique():
        f = prefix(thm5_graph(g, 2), 9, 0)
        return _ok(has_clique(f, 8) is not None and k_colorable(f, 3) is None)

    def two_colorable():
        bad = [c for c in range(21) if k_colorable(prefix(thm5_graph(g, 3), c, 0), 2) is None]
        return _ok(not bad, f"not 2-colorable at {bad}")

    def separator():
        ns = list(range(11))
        got = thm5_separator(g, ns)
        want = [int(not g.in_range(n)) for n in ns]
        return _ok(got == want, f"computed {got}, expected {want}")

    rep.check("doubling, n=2: prefix(9) has an 8-clique and is not 3-colorable", clique)
    rep.check("doubling, n=3: prefixes 0..20 are 2-colorable", two_colorable)
    rep.check("separator over n <= 10 matches 'n not in range(g)'", separator)
    return rep


def suite_thm6(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm6")
    B = DEFAULT_BUDGET
    binary = TreeSpec.named("tree:binary")

    def incomparability():
        g = thm6_graph(binary)
        members = [c for c in range(101) if binary.member_code(c)]
        bad = [
            (a, b)
            for i, a in enumerate(members)
            for b in members[i + 1 :]
            if (edge_at(g, SeqV(a), SeqV(b), B) is TriEdge.EDGE)
            == (is_prefix(decode(a), decode(b)) or is_prefix(decode(b), decode(a)))
        ]
        return _ok(not bad, f"{len(members)} members, mismatches {bad[:5]}")

    def chain_of_five():
        nodes = binary.nodes(4, branch=2)
        f = extract(thm6_graph(binary), [SeqV(encode(s)) for s in nodes], B)
        found = independent_set(f, 5)
        return _ok(found is not None and is_independent(f, found), f"{len(nodes)} nodes, found {found}")

    def finite_bound():
        t = TreeSpec.named("tree:finite(2)")
        f = prefix(thm6_graph(t), 10**6, B)
        return _ok(independent_set(f, 4) is None and independent_set(f, 3) is not None, f"{len(f)} nodes")

    rep.check("tree:binary: edge iff incomparable, member codes <= 100", incomparability)
    rep.check("tree:binary depth 4: independent set of size 5", chain_of_five)
    rep.check("tree:finite(2): no independent set of size 4", finite_bound)
    return rep


def suite_thm7(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm7")
    B = DEFAULT_BUDGET
    h = prefix(ray_triangle_H(), 8, B)

    def into_ray():
        g = prefix(thm7_G(registry_get("tree:ray0")), 15, B)
        emb = subgraph_embedding(h, g)
        if emb is None:
            return _ok(False, "no embedding")
        tris = triangles(g)
        unique = len(tris) == 1 and {g.vertices[i] for i in tris[0]} == {Special(0), Special(1), Special(2)}
        img = {emb[Nat(i)] for i in range(3)}
        return _ok(
            unique and is_embedding(h, g, emb) and img == {Special(0), Special(1), Special(2)},
            f"triangle -> {sorted(map(str, img))}",
        )

    def not_into_finite():
        t = TreeSpec.named("tree:finite(2)")
        g = prefix(thm7_G(t.program), 3 + t.code_bound + 1, B)
        return _ok(subgraph_embedding(h, g) is None, f"{len(g)} vertices")

    def gap_undecided():
        gap = registry_get("notree:gap")
        bad = [c for c in range(5, 16) if prefix(thm7_G(gap), c, B).decided]
        return _ok(not bad, f"decided at counts {bad}")

    rep.check("triangle+5-ray embeds into thm7_G(tree:ray0), triangle onto the unique triangle", into_ray)
    rep.check("triangle+5-ray does not embed into thm7_G(tree:finite(2))", not_into_finite)
    rep.check("notree:gap: prefixes 5..15 have undecided pairs", gap_undecided)
    return rep


THM9_PROGRAMS = ("tree:finite(2)", "tree:binary", "tree:binary")


def suite_thm9(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm9")
    programs = [registry_get(n) for n in THM9_PROGRAMS]
    g = thm9_G(programs)

    def sizes():
        got = {}
        for e in (0, 1, 2):
            f = prefix(cycle_ray_H(e), 3 + 3 * cycle_length(e), 0)
            for k in range(3):
                got[(e, k)] = sum(1 for v in f.vertices if isinstance(v, CycleV) and v.k == k)
            win = extract(g, thm9_window(e, 2, 1), 0)
            for v in win.vertices:
                if isinstance(v, CycleV):
                    got.setdefault(("G", e, v.code, v.k), 0)
                    got[("G", e, v.code, v.k)] += 1
        ok = all(n == cycle_length(key[1] if key[0] == "G" else key[0]) for key, n in got.items())
        return _ok(ok and cycle_length(1) == 6, f"sizes e=0,1,2: {[cycle_length(e) for e in range(3)]}")

    def uniqueness():
        bad = []
        for name in ("tree:binary", "tree:ray0", "tree:finite(2)", "tree:desc", "notree:gap", "partial:slow"):
            p = registry_get(name)
            for c in range(1, 31):
                ks = [k for k in range(EXACT_K_BOUND + 1) if thm9_exact(p, decode(c), k)]
                if len(ks) > 1:
                    bad.append((name, c, ks))
        return _ok(not bad, f"multiple exact stages: {bad[:3]}")

    h1 = prefix(cycle_ray_H(1), 3 + 3 * cycle_length(1), 0)

    def embeds_e1():
        win = extract(g, thm9_window(1, 4, 6), 0)
        emb = subgraph_embedding(h1, win)
        return _ok(emb is not None and is_embedding(h1, win, emb), f"{len(h1)} into {len(win)}")

    def rigid_e2():
        win = extract(g, thm9_window(2, 4, 6), 0)
        return _ok(subgraph_embedding(h1, win) is None, f"{len(h1)} into {len(win)}")

    def spurious():
        bad = []
        for e in (1, 2):
            win = extract(g, thm9_window(e, 6, 8), 0)
            for i, v in enumerate(win.vertices):
                if isinstance(v, CycleV) and not thm9_exact(programs[e], decode(v.code), v.k):
                    out = [w for w in win.neighbors(i) if (win.vertices[w].code, win.vertices[w].k) != (v.code, v.k)
                           or not isinstance(win.vertices[w], CycleV)]
                    if out:
                        bad.append(str(v))
        return _ok(not bad, f"linked spurious vertices: {bad[:3]}")

    def hygiene():
        f = prefix(g, 400, 0)
        bad = [(i, j) for i, j in f.edges() if f.vertices[i].e != f.vertices[j].e]
        return _ok(not bad, f"cross edges {bad[:3]}")

    rep.check("cycle sizes are 2(e+1)+2 for e=0,1,2 (hexagon at e=1)", sizes)
    rep.check("at most one exact stage per (program, sigma), codes <= 30", uniqueness)
    rep.check("cycle_ray_H(1), 3 cycles, embeds into component 1 (tree:binary)", embeds_e1)
    rep.check("cycle_ray_H(1), 3 cycles, does not embed into component 2 (octagons)", rigid_e2)
    rep.check("spurious cycles have no connection edges", spurious)
    rep.check("no edges between components", hygiene)
    return rep


def suite_thm10_3(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm10-3")

    def mutual():
        res = []
        for n in (5, 8, 10):
            h = prefix(ray_triangle_H(), n, 0)
            g = prefix(thm10_G3(TreeSpec.named("tree:ray0")), n, 0)
            res.append(subgraph_embedding(h, g) is not None and subgraph_embedding(g, h) is not None)
        return _ok(all(res), f"sizes 5,8,10: {res}")

    def finite_count():
        t = TreeSpec.named("tree:finite(2)")
        f = prefix(thm10_G3(t), 10**6, 0)
        members = sum(1 for _ in t.codes())
        return _ok(len(f) == members + 2, f"{len(f)} vertices, {members} members")

    def root_triangle():
        f = prefix(thm10_G3(TreeSpec.named("tree:binary")), 10, 0)
        return is_clique(f, [Special(1), Special(2), SeqV(0)])

    rep.check("thm10_G3(tree:ray0) and ray_triangle_H mutually embeddable", mutual)
    rep.check("thm10_G3(tree:finite(2)) has members + 2 vertices", finite_count)
    rep.check("root and auxiliaries form a triangle", root_triangle)
    return rep


THM10_TREES = ("tree:ray0", "tree:finite(2)", "tree:binary")


def suite_thm10_4(seed: int = 0) -> CheckReport:
    rep = CheckReport("thm10-4")
    trees = [TreeSpec.named(n) for n in THM10_TREES]

    def separator():
        got = thm10_separator(trees)
        return _ok(got == [1, 0, 1], f"computed {got}")

    def hexagons():
        f = extract(thm10_G4(trees), thm10_G4_window(trees, 1, 2, branch=2), 0)
        cyc = [v for v in f.vertices if isinstance(v, CycleV)]
        codes = {v.code for v in cyc}
        return _ok(all(sum(1 for v in cyc if v.code == c) == 6 for c in codes), f"{len(codes)} cycles")

    def ray_copy():
        f = extract(thm10_G4(trees), thm10_G4_window(trees, 0, 4, branch=2), 0)
        h = prefix(cycle_ray_H(0), len(f), 0)
        return _ok(subgraph_embedding(h, f) is not None and subgraph_embedding(f, h) is not None, f"{len(f)} vertices")

    def disjoint():
        # ray0 codes grow doubly exponentially, so keep the prefix short and
        # add the depth-3 windows of every component
        g = thm10_G4(trees)
        verts = list(dict.fromkeys(
            g.take(60) + [v for n in range(len(trees)) for v in thm10_G4_window(trees, n, 3, 2)]
        ))
        f = extract(g, verts, 0)
        bad = [(i, j) for i, j in f.edges() if f.vertices[i].e != f.vertices[j].e]
        return _ok(not bad, f"{len(f)} vertices")

    rep.check("separator over [ray0, finite(2), binary] is [1, 0, 1]", separator)
    rep.check("component 1 uses hexagons", hexagons)
    rep.check("tree:ray0 component is a copy of cycle_ray_H(0)", ray_copy)
    rep.check("no edges between components", disjoint)
    return rep


def suite_solvers(seed: int = 0) -> CheckReport:
    rep = CheckReport("solvers")
    rng = np.random.default_rng(seed)
    graphs = [random_prefix(rng, int(rng.integers(1, 7))) for _ in range(200)]
    pairs = [
        (random_prefix(rng, int(rng.integers(1, 5))), random_prefix(rng, int(rng.integers(1, 7))))
        for _ in range(100)
    ]

    def coloring_agreement():
        bad = 0
        for f in graphs:
            for k in range(1, 5):
                col = k_colorable(f, k)
                if (col is not None) != (exhaustive_colorings(f, k) > 0):
                    bad += 1
                elif col is not None and not (is_valid_coloring(f, col) and max(col.values()) < k):
                    bad += 1
        return _ok(bad == 0, f"200 graphs x k=1..4, {bad} disagreements")

    def embedding_agreement():
        bad = 0
        for h, g in pairs:
            emb = subgraph_embedding(h, g)
            if (emb is not None) != (exhaustive_embedding(h, g) is not None):
                bad += 1
            elif emb is not None and not is_embedding(h, g, emb):
                bad += 1
        return _ok(bad == 0, f"100 pairs, {bad} disagreements")

    def chromatic_bounds():
        bad = 0
        for f in graphs:
            chi = chromatic_number(f)
            maxdeg = int(f.degrees().max()) if len(f) else 0
            clique = max(s for s in range(len(f) + 1) if has_clique(f, s) is not None)
            if not (clique <= chi <= 1 + maxdeg):
                bad += 1
        return _ok(bad == 0, f"{bad} violations")

    def determinism():
        return all(k_colorable(f, 3) == k_colorable(f, 3) for f in graphs[:50]) and all(
            subgraph_embedding(h, g) == subgraph_embedding(h, g) for h, g in pairs[:50]
        )

    rep.check("k_colorable agrees with exhaustive enumeration (200 graphs)", coloring_agreement)
    rep.check("subgraph_embedding agrees with exhaustive search (100 pairs)", embedding_agreement)
    rep.check("clique <= chromatic number <= 1 + max degree", chromatic_bounds)
    rep.check("identical inputs give identical witnesses", determinism)
    return rep


SUITES: dict[str, Callable[[int], CheckReport]] = {
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "eta": suite_eta,
    "thm4": suite_thm4,
    "thm5": suite_thm5,
    "thm6": suite_thm6,
    "thm7": suite_thm7,
    "thm9": suite_thm9,
    "thm10-3": suite_thm10_3,
    "thm10-4": suite_thm10_4,
    "solvers": suite_solvers,
}


def run_suite(name: str, seed: int = 0) -> list[CheckReport]:
    if name == "all":
        return [fn(seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](seed)]
