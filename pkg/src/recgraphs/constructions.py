"""Graph constructors for the reductions, one per construction.

Enumeration orders (fixed, so prefixes are deterministic):

* ``thm1_graph``, ``thm5_graph``, ``ray_triangle_H``: ``Nat(0), Nat(1), ...``
* ``thm2_graph``: diagonal ``d = m + j``; on diagonal ``d`` the rows
  ``Row(0, d), Row(1, d-1), ..., Row(d, 0)`` followed by the clique extras
  ``CliqueExtra(d, 1..d)`` of row ``d``.
* ``thm4_graph``: ``SeqV(0), SeqV(1), ...`` (all codes ascending).
* ``thm6_graph``: member codes ascending.
* ``thm7_G``: ``Special(0..2)`` then all codes ascending.
* ``cycle_ray_H(e)``: ``T0(e), TriAux(e, 1), TriAux(e, 2)``, then cycle
  ``k = 0, 1, ...`` position by position.
* ``thm9_G``: components interleaved diagonally; inside component ``e`` the
  triangle, then cycles ``C(e, c, k)`` over diagonals of ``(c - 1) + k``
  (``c`` ascending within a diagonal), each position by position.
* ``thm10_G3``: ``Special(1), Special(2)``, then member codes ascending.
* ``thm10_G4``: components interleaved diagonally; inside component ``n`` the
  triangle, then one cycle per non-root member code, ascending.

Cycles have ``2(e+1)+2`` vertices; ``v0`` is position 0 and ``v1`` is
position ``e+2``, so both paths between them have ``e+2`` edges.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

from .codes import (
    Seq,
    TriValue,
    comparable,
    decode,
    encode,
    eta_converged_by,
    eta_eval,
    is_immediate_extension,
)
from .errors import BudgetExhausted, GroundTruthError
from .graphs import (
    CliqueExtra,
    ComputableGraph,
    CycleV,
    Nat,
    Row,
    SeqV,
    Special,
    T0,
    TriAux,
    TriEdge,
)
from .machine import ProgramRef, TreeKind, halts_by
from .registry import registry_get

__all__ = [
    "TreeSpec",
    "InjectionSpec",
    "INJECTIONS",
    "injection_get",
    "cycle_length",
    "thm1_graph",
    "thm2_graph",
    "thm4_graph",
    "thm4_witness_coloring",
    "thm5_graph",
    "thm6_graph",
    "ray_triangle_H",
    "thm7_G",
    "cycle_ray_H",
    "thm9_exact",
    "thm9_G",
    "thm9_window",
    "thm10_G3",
    "thm10_G4",
    "thm10_G4_window",
]


# ---------------------------------------------------------------------------
# Inputs


@dataclass(frozen=True)
class TreeSpec:
    """A tree given by a program, with membership read off eta at ``budget``.

    ``code_bound`` caps the codes scanned when enumerating members; it
    defaults to the ground truth's ``max_code`` for finite trees and is
    otherwise unbounded.
    """

    program: ProgramRef
    budget: Optional[int] = None
    code_bound: Optional[int] = None

    def __post_init__(self) -> None:
        if self.budget is None:
            object.__setattr__(self, "budget", self.program.sufficient_budget)
        gt = self.program.ground_truth
        if self.code_bound is None and gt is not None and gt.max_code is not None:
            object.__setattr__(self, "code_bound", gt.max_code)

    @classmethod
    def named(cls, name: str, **kwargs) -> "TreeSpec":
        return cls(registry_get(name), **kwargs)

    @property
    def name(self) -> str:
        return self.program.name

    def member(self, sigma: Seq) -> bool:
        v = eta_eval(self.program, tuple(sigma), self.budget)
        if v is TriValue.PENDING:
            raise BudgetExhausted(
                f"membership of {sigma} in {self.name} undecided at budget {self.budget}"
            )
        return v is TriValue.ONE

    def member_code(self, code: int) -> bool:
        return self.member(decode(code))

    def codes(self) -> Iterator[int]:
        """Member codes in ascending order.

        Members form a prefix-closed set and codes grow along both
        ``sigma -> sigma * <0>`` and ``rho * <m> -> rho * <m+1>``, so a heap
        over those two moves yields every member in code order while only
        querying candidates that could be members.
        """
        heap = [(0, ())]
        while heap:
            code, sigma = heapq.heappop(heap)
            if self.code_bound is not None and code > self.code_bound:
                return
            if sigma:
                sib = sigma[:-1] + (sigma[-1] + 1,)
                heapq.heappush(heap, (encode(sib), sib))
            if self.member(sigma):
                yield code
                child = sigma + (0,)
                heapq.heappush(heap, (encode(child), child))

    def nodes(self, depth: int, branch: int = 10) -> list[Seq]:
        """Members of length <= depth with entries < branch, sorted by code."""
        found = []

        def walk(sigma: Seq) -> None:
            found.append(sigma)
            if len(sigma) == depth:
                return
            for m in range(branch):
                tau = sigma + (m,)
                if self.member(tau):
                    walk(tau)

        if self.member(()):
            walk(())
        return sorted(found, key=encode)

    def path_node(self, n: int) -> Seq:
        gt = self.program.ground_truth
        if gt is None or gt.tree is not TreeKind.INFINITE_PATH or gt.path is None:
            raise GroundTruthError(f"{self.name} has no documented infinite path")
        return tuple(gt.path(i) for i in range(n))


@dataclass(frozen=True)
class InjectionSpec:
    name: str
    fn: Callable[[int], int] = field(compare=False)
    in_range: Callable[[int], bool] = field(compare=False)
    description: str = ""

    def __call__(self, t: int) -> int:
        return self.fn(t)


INJECTIONS = {
    "doubling": InjectionSpec("doubling", lambda t: 2 * t, lambda n: n % 2 == 0, "g(t) = 2t"),
    "odds": InjectionSpec("odds", lambda t: 2 * t + 1, lambda n: n % 2 == 1, "g(t) = 2t + 1"),
    "identity": InjectionSpec("identity", lambda t: t, lambda n: True, "g(t) = t"),
    "successor": InjectionSpec("successor", lambda t: t + 1, lambda n: n >= 1, "g(t) = t + 1"),
}


def injection_get(name: str) -> InjectionSpec:
    try:
        return INJECTIONS[name]
    except KeyError:
        raise ValueError(f"unknown injection {name!r}") from None


def cycle_length(e: int) -> int:
    return 2 * (e + 1) + 2


# ---------------------------------------------------------------------------
# helpers


def _naturals() -> Iterator[Nat]:
    return (Nat(n) for n in count())


def _is_nat(v: Hashable) -> bool:
    return isinstance(v, Nat) and v.n >= 0


def _diagonal(iterables: Sequence[Iterable[Hashable]]) -> Iterator[Hashable]:
    """Interleave: component ``e`` contributes one item on every diagonal ``d >= e``."""
    its = [iter(x) for x in iterables]
    active: list[int] = []
    for d in count():
        if d < len(its):
            active.append(d)
        elif not active:
            return
        for e in list(active):
            try:
                yield next(its[e])
            except StopIteration:
                active.remove(e)


def _triangle(e: int) -> tuple[Hashable, ...]:
    return (T0(e), TriAux(e, 1), TriAux(e, 2))


def _is_triangle_vertex(v: Hashable) -> bool:
    return isinstance(v, (T0, TriAux))


def _cycle_vertices(e: int, code: int, k: int) -> Iterator[CycleV]:
    return (CycleV(e, code, k, pos) for pos in range(cycle_length(e)))


def _same_cycle_edge(u: CycleV, v: CycleV) -> bool:
    n = cycle_length(u.e)
    return (u.e, u.code, u.k) == (v.e, v.code, v.k) and (u.pos - v.pos) % n in (1, n - 1)


# ---------------------------------------------------------------------------
# Coloring reductions


def thm1_graph(p: ProgramRef) -> ComputableGraph:
    """Edge ``(m, n)``, ``m < n``, iff ``p`` halts on its self-input by stage ``m``."""

    def oracle(u: Nat, v: Nat, budget: int) -> TriEdge:
        return TriEdge.of(halts_by(p, p.self_input, min(u.n, v.n)))

    return ComputableGraph(f"thm1[{p.name}]", _naturals, _is_nat, oracle)


def _thm2_vertices() -> Iterator[Hashable]:
    for d in count():
        for m in range(d + 1):
            yield Row(m, d - m)
        for i in range(1, d + 1):
            yield CliqueExtra(d, i)


def _thm2_contains(v: Hashable) -> bool:
    if isinstance(v, Row):
        return v.m >= 0 and v.j >= 0
    if isinstance(v, CliqueExtra):
        return 1 <= v.i <= v.m
    return False


def _clique_row(v: Hashable) -> Optional[int]:
    if isinstance(v, CliqueExtra):
        return v.m
    if isinstance(v, Row) and v.j == 0:
        return v.m
    return None


def thm2_graph(p: ProgramRef) -> ComputableGraph:
    """Ladder of rows; row ``m`` starts in an ``(m+1)``-clique and rungs at height
    ``j`` join rows ``m`` and ``m+1`` iff ``p`` halts on ``m`` by stage ``j``."""

    def oracle(u: Hashable, v: Hashable, budget: int) -> TriEdge:
        cu, cv = _clique_row(u), _clique_row(v)
        if cu is not None and cu == cv:
            return TriEdge.EDGE
        if isinstance(u, Row) and isinstance(v, Row):
            a, b = sorted([u, v])
            if a.m == b.m and b.j == a.j + 1:
                return TriEdge.EDGE
            if a.j == b.j and b.m == a.m + 1:
                return TriEdge.of(halts_by(p, a.m, a.j))
        return TriEdge.NO_EDGE

    return ComputableGraph(f"thm2[{p.name}]", _thm2_vertices, _thm2_contains, oracle)


def _codes() -> Iterator[SeqV]:
    return (SeqV(c) for c in count())


def _is_seqv(v: Hashable) -> bool:
    return isinstance(v, SeqV) and v.code >= 0


def thm4_graph(p: ProgramRef) -> ComputableGraph:
    """Incomparability graph of the tree ``p`` with every non-member joined to everything.

    Pending whenever either endpoint's eta is Pending at the budget.
    """

    def oracle(u: SeqV, v: SeqV, budget: int) -> TriEdge:
        a = eta_eval(p, u.seq, budget)
        b = eta_eval(p, v.seq, budget)
        if a is TriValue.PENDING or b is TriValue.PENDING:
            return TriEdge.PENDING
        if a is TriValue.ONE and b is TriValue.ONE:
            return TriEdge.of(not comparable(u.seq, v.seq))
        return TriEdge.EDGE

    return ComputableGraph(f"thm4[{p.name}]", _codes, _is_seqv, oracle)


def thm4_witness_coloring(p: ProgramRef, prefix_count: int) -> dict[SeqV, int]:
    """Color the documented infinite path 0 and every other code ``c`` with ``c + 1``."""
    gt = p.ground_truth
    if gt is None or gt.tree is not TreeKind.INFINITE_PATH or gt.path is None:
        raise GroundTruthError(f"{p.name} is not documented as a tree with an infinite path")
    coloring = {}
    for c in range(prefix_count):
        sigma = decode(c)
        on_path = all(x == gt.path(i) for i, x in enumerate(sigma))
        coloring[SeqV(c)] = 0 if on_path else c + 1
    return coloring


def thm5_graph(g: InjectionSpec, n: int) -> ComputableGraph:
    """Path on the naturals, plus every chord ``(j, k)`` once ``n`` is in ``g[0..j]``."""

    @lru_cache(maxsize=None)
    def hit_by(j: int) -> bool:
        return any(g(t) == n for t in range(j + 1))

    def oracle(u: Nat, v: Nat, budget: int) -> TriEdge:
        j, k = sorted((u.n, v.n))
        return TriEdge.of(k == j + 1 or hit_by(j))

    return ComputableGraph(f"thm5[{g.name},{n}]", _naturals, _is_nat, oracle)


def thm6_graph(t: TreeSpec) -> ComputableGraph:
    """Incomparability graph on the members of ``t``."""

    def contains(v: Hashable) -> bool:
        return _is_seqv(v) and t.member_code(v.code)

    def oracle(u: SeqV, v: SeqV, budget: int) -> TriEdge:
        return TriEdge.of(not comparable(u.seq, v.seq))

    return ComputableGraph(
        f"thm6[{t.name}]", lambda: (SeqV(c) for c in t.codes()), contains, oracle
    )


# ---------------------------------------------------------------------------
# Subgraph reductions


def ray_triangle_H() -> ComputableGraph:
    """``v0 v1 v2`` form a triangle and ``v2 v3 v4 ...`` is a ray."""

    def oracle(u: Nat, v: Nat, budget: int) -> TriEdge:
        a, b = sorted((u.n, v.n))
        return TriEdge.of(b == a + 1 or (a, b) == (0, 2))

    return ComputableGraph("ray-triangle-H", _naturals, _is_nat, oracle)


def _thm7_vertices() -> Iterator[Hashable]:
    yield from (Special(i) for i in range(3))
    yield from _codes()


def thm7_G(p: ProgramRef) -> ComputableGraph:
    """The tree of ``p`` as parent/child edges, a triangle on its root, and
    non-members left isolated.  Pending whenever either eta is Pending."""

    def contains(v: Hashable) -> bool:
        return (isinstance(v, Special) and 0 <= v.i <= 2) or _is_seqv(v)

    def oracle(u: Hashable, v: Hashable, budget: int) -> TriEdge:
        if isinstance(u, Special) and isinstance(v, Special):
            return TriEdge.EDGE
        if isinstance(u, Special) or isinstance(v, Special):
            s, w = (u, v) if isinstance(u, Special) else (v, u)
            return TriEdge.of(s.i == 0 and w.code == 0)
        a = eta_eval(p, u.seq, budget)
        b = eta_eval(p, v.seq, budget)
        if a is TriValue.PENDING or b is TriValue.PENDING:
            return TriEdge.PENDING
        linked = is_immediate_extension(u.seq, v.seq) or is_immediate_extension(v.seq, u.seq)
        return TriEdge.of(a is TriValue.ONE and b is TriValue.ONE and linked)

    return ComputableGraph(f"thm7-G[{p.name}]", _thm7_vertices, contains, oracle)


def _cycle_ray_vertices(e: int) -> Iterator[Hashable]:
    yield from _triangle(e)
    root = encode((0,))
    for k in count():
        yield from _cycle_vertices(e, root, k)


def cycle_ray_H(e: int) -> ComputableGraph:
    """Triangle on ``T0(e)`` followed by a chain of cycles ``C(e, <0>, k)``.

    ``T0(e)`` attaches to ``v0`` of cycle 0 only; ``v1`` of cycle ``k`` joins
    ``v0`` of cycle ``k+1``.
    """
    root = encode((0,))
    size = cycle_length(e)

    def contains(v: Hashable) -> bool:
        if isinstance(v, T0):
            return v.e == e
        if isinstance(v, TriAux):
            return v.e == e and v.i in (1, 2)
        if isinstance(v, CycleV):
            return v.e == e and v.code == root and v.k >= 0 and 0 <= v.pos < size
        return False

    def oracle(u: Hashable, v: Hashable, budget: int) -> TriEdge:
        if _is_triangle_vertex(u) and _is_triangle_vertex(v):
            return TriEdge.EDGE
        if _is_triangle_vertex(u) or _is_triangle_vertex(v):
            t, c = (u, v) if _is_triangle_vertex(u) else (v, u)
            return TriEdge.of(isinstance(t, T0) and c.k == 0 and c.pos == 0)
        if _same_cycle_edge(u, v):
            return TriEdge.EDGE
        a, b = sorted([u, v], key=lambda w: w.k)
        return TriEdge.of(b.k == a.k + 1 and a.pos == e + 2 and b.pos == 0)

    return ComputableGraph(f"cycle-ray-H[{e}]", lambda: _cycle_ray_vertices(e), contains, oracle)


def _exact_condition(p: ProgramRef, code: int, k: int) -> bool:
    if k < 0:
        return False
    sigma = decode(code)
    if eta_eval(p, sigma, k) is not TriValue.ONE:
        return False
    # prefixes of sigma have smaller codes, so this covers them too
    return all(eta_converged_by(p, decode(c), k) for c in range(code))


@lru_cache(maxsize=1 << 16)
def _exact(p: ProgramRef, code: int, k: int) -> bool:
    return _exact_condition(p, code, k) and not _exact_condition(p, code, k - 1)


def thm9_exact(p: ProgramRef, sigma: Seq, k: int) -> bool:
    """True iff ``k`` is the least stage by which eta has converged on every
    sequence coded below ``sigma`` (or prefixing it) and equals 1 on ``sigma``."""
    sigma = tuple(sigma)
    if not sigma:
        raise ValueError("exactness is defined for non-empty sequences")
    return _exact(p, encode(sigma), k)


def _thm9_component(e: int) -> Iterator[Hashable]:
    yield from _triangle(e)
    for d in count():
        for c in range(1, d + 2):
            yield from _cycle_vertices(e, c, d - (c - 1))


def _cycle_link(
    u: CycleV, v: CycleV, e: int, usable: Callable[[CycleV], bool]
) -> bool:
    for a, b in ((u, v), (v, u)):
        if a.pos == e + 2 and b.pos == 0 and usable(a) and usable(b):
            if is_immediate_extension(decode(a.code), decode(b.code)):
                return True
    return False


def thm9_G(programs: Sequence[ProgramRef]) -> ComputableGraph:
    """Disjoint union over positions ``e`` of triangle-rooted trees of exact cycles.

    Non-exact (spurious) cycles are present but never linked.  Every rule is
    a bounded computation, so the oracle ignores the budget.
    """
    programs = tuple(programs)

    def contains(v: Hashable) -> bool:
        e = getattr(v, "e", None)
        if e is None or not 0 <= e < len(programs):
            return False
        if isinstance(v, T0):
            return True
        if isinstance(v, TriAux):
            return v.i in (1, 2)
        if isinstance(v, CycleV):
            return v.code >= 1 and v.k >= 0 and 0 <= v.pos < cycle_length(e)
        return False

    def oracle(u: Hashable, v: Hashable, budget: int) -> TriEdge:
        if u.e != v.e:
            return TriEdge.NO_EDGE
        e = u.e
        p = programs[e]
        if _is_triangle_vertex(u) and _is_triangle_vertex(v):
            return TriEdge.EDGE
        if _is_triangle_vertex(u) or _is_triangle_vertex(v):
            t, c = (u, v) if _is_triangle_vertex(u) else (v, u)
            return TriEdge.of(
                isinstance(t, T0)
                and c.pos == 0
                and len(decode(c.code)) == 1
                and _exact(p, c.code, c.k)
            )
        if (u.code, u.k) == (v.code, v.k):
            return TriEdge.of(_same_cycle_edge(u, v))
        return TriEdge.of(_cycle_link(u, v, e, lambda w: _exact(p, w.code, w.k)))

    return ComputableGraph(
        "thm9-G[" + ",".join(p.name for p in programs) + "]",
        lambda: _diagonal([_thm9_component(e) for e in range(len(programs))]),
        contains,
        oracle,
    )


def thm9_window(e: int, max_code: int, max_k: int) -> list[Hashable]:
    """Component ``e`` of ``thm9_G`` cut down to cycles with ``code <= max_code`` and ``k <= max_k``."""
    verts: list[Hashable] = list(_triangle(e))
    for c in range(1, max_code + 1):
        for k in range(max_k + 1):
            verts.extend(_cycle_vertices(e, c, k))
    return verts


# ---------------------------------------------------------------------------
# Tree sequences


def thm10_G3(t: TreeSpec) -> ComputableGraph:
    """The tree ``t`` with parent/child edges and a triangle sharing its root."""

    def contains(v: Hashable) -> bool:
        if isinstance(v, Special):
            return v.i in (1, 2)
        return _is_seqv(v) and t.member_code(v.code)

    def oracle(u: Hashable, v: Hashable, budget: int) -> TriEdge:
        if isinstance(u, Special) and isinstance(v, Special):
            return TriEdge.EDGE
        if isinstance(u, Special) or isinstance(v, Special):
            w = v if isinstance(u, Special) else u
            return TriEdge.of(w.code == 0)
        return TriEdge.of(
            is_immediate_extension(u.seq, v.seq) or is_immediate_extension(v.seq, u.seq)
        )

    def vertices() -> Iterator[Hashable]:
        yield Special(1)
        yield Special(2)
        yield from (SeqV(c) for c in t.codes())

    return ComputableGraph(f"thm10-3[{t.name}]", vertices, contains, oracle)


def _thm10_component(n: int, t: TreeSpec) -> Iterator[Hashable]:
    yield from _triangle(n)
    for c in t.codes():
        if c:
            yield from _cycle_vertices(n, c, 0)


def thm10_G4(trees: Sequence[TreeSpec]) -> ComputableGraph:
    """Disjoint union over ``n`` of tree ``n`` with each non-root node replaced by a
    ``2(n+1)+2`` cycle and a triangle on the root ``T0(n)``."""
    trees = tuple(trees)

    def contains(v: Hashable) -> bool:
        n = getattr(v, "e", None)
        if n is None or not 0 <= n < len(trees):
            return False
        if isinstance(v, T0):
            return True
        if isinstance(v, TriAux):
            return v.i in (1, 2)
        if isinstance(v, CycleV):
            return (
                v.code >= 1
                and v.k == 0
                and 0 <= v.pos < cycle_length(n)
                and trees[n].member_code(v.code)
            )
        return False

    def oracle(u: Hashable, v: Hashable, budget: int) -> TriEdge:
        if u.e != v.e:
            return TriEdge.NO_EDGE
        n = u.e
        if _is_triangle_vertex(u) and _is_triangle_vertex(v):
            return TriEdge.EDGE
        if _is_triangle_vertex(u) or _is_triangle_vertex(v):
            t, c = (u, v) if _is_triangle_vertex(u) else (v, u)
            return TriEdge.of(isinstance(t, T0) and c.pos == 0 and len(decode(c.code)) == 1)
        if u.code == v.code:
            return TriEdge.of(_same_cycle_edge(u, v))
        return TriEdge.of(_cycle_link(u, v, n, lambda w: True))

    return ComputableGraph(
        "thm10-4[" + ",".join(t.name for t in trees) + "]",
        lambda: _diagonal([_thm10_component(n, t) for n, t in enumerate(trees)]),
        contains,
        oracle,
    )


def thm10_G4_window(trees: Sequence[TreeSpec], n: int, depth: int, branch: int = 3) -> list[Hashable]:
    """Component ``n`` of ``thm10_G4`` restricted to tree nodes of length <= depth."""
    verts: list[Hashable] = list(_triangle(n))
    for sigma in trees[n].nodes(depth, branch):
        if sigma:
            verts.extend(_cycle_vertices(n, encode(sigma), 0))
    return verts
