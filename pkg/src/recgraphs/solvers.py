"""Exact search on finite prefixes, plus brute-force oracles to check it against.

All searches are deterministic: vertices are taken in enumeration order,
colors and images ascending, and the first witness found is returned.
Every solver refuses prefixes with undecided pairs.
"""

from __future__ import annotations

import sys
from collections import deque
from contextlib import contextmanager
from itertools import permutations, product
from typing import Hashable, Iterator, Optional

from .constructions import TreeSpec
from .errors import SizeGuardError
from .graphs import FinitePrefix

__all__ = [
    "k_colorable",
    "chromatic_number",
    "has_clique",
    "independent_set",
    "component_of",
    "subgraph_embedding",
    "is_embedding",
    "is_clique",
    "is_independent",
    "iter_colorings",
    "exhaustive_colorings",
    "exhaustive_embedding",
    "tree_path_length",
    "MAX_COLORING_ORACLE",
    "MAX_EMBED_H",
    "MAX_EMBED_G",
]

MAX_COLORING_ORACLE = 8
MAX_EMBED_H = 5
MAX_EMBED_G = 7


@contextmanager
def _recursion_room(depth: int):
    old = sys.getrecursionlimit()
    if depth + 200 > old:
        sys.setrecursionlimit(depth + 200)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _nbr_lists(f: FinitePrefix) -> list[list[int]]:
    return [f.neighbors(i) for i in range(len(f))]


def _bitsets(f: FinitePrefix) -> list[int]:
    bits = []
    for row in f.adjacency:
        b = 0
        for j in row.nonzero()[0]:
            b |= 1 << int(j)
        bits.append(b)
    return bits


def _components(nbrs: list[list[int]]) -> list[list[int]]:
    seen = [False] * len(nbrs)
    comps = []
    for s in range(len(nbrs)):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _greedy_clique(nbrs: list[list[int]], verts: list[int]) -> int:
    """Size of a clique found greedily from each start vertex; a lower bound."""
    best = 1 if verts else 0
    nset = [set(x) for x in nbrs]
    for s in verts:
        clique = [s]
        cand = sorted(nset[s], key=lambda w: (-len(nbrs[w]), w))
        for w in cand:
            if all(w in nset[c] for c in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best


def _color_component(nbrs: list[list[int]], verts: list[int], k: int) -> Optional[dict[int, int]]:
    color: dict[int, int] = {}
    uncolored = set(verts)

    def pick() -> int:
        # DSATUR: most distinct neighbor colors, then highest degree, then lowest index
        best, key = -1, None
        for v in sorted(uncolored):
            sat = len({color[w] for w in nbrs[v] if w in color})
            cand = (sat, len(nbrs[v]))
            if key is None or cand > key:
                best, key = v, cand
        return best

    def search() -> bool:
        if not uncolored:
            return True
        v = pick()
        used = {color[w] for w in nbrs[v] if w in color}
        top = max(color.values(), default=-1)
        uncolored.discard(v)
        for c in range(min(k, top + 2)):
            if c in used:
                continue
            color[v] = c
            if search():
                return True
            del color[v]
        uncolored.add(v)
        return False

    with _recursion_room(len(verts)):
        return color if search() else None


def k_colorable(f: FinitePrefix, k: int) -> Optional[dict[Hashable, int]]:
    """A proper coloring with colors ``0..k-1``, or ``None`` if there is none."""
    f.require_decided()
    if len(f) == 0:
        return {}
    if k <= 0:
        return None
    nbrs = _nbr_lists(f)
    result: dict[int, int] = {}
    for comp in _components(nbrs):
        if _greedy_clique(nbrs, comp) > k:
            return None
        part = _color_component(nbrs, comp, k)
        if part is None:
            return None
        result.update(part)
    return {f.vertices[i]: result[i] for i in range(len(f))}


def chromatic_number(f: FinitePrefix) -> int:
    f.require_decided()
    nbrs = _nbr_lists(f)
    best = 0
    for comp in _components(nbrs):
        k = max(best, _greedy_clique(nbrs, comp))
        while _color_component(nbrs, comp, k) is None:
            k += 1
        best = k
    return best


def _find_clique(bits: list[int], cand: int, size: int, chosen: list[int]) -> Optional[list[int]]:
    if len(chosen) == size:
        return chosen
    while cand and bin(cand).count("1") >= size - len(chosen):
        v = (cand & -cand).bit_length() - 1
        cand &= ~(1 << v)
        found = _find_clique(bits, cand & bits[v], size, chosen + [v])
        if found is not None:
            return found
    return None


def has_clique(f: FinitePrefix, size: int) -> Optional[list[Hashable]]:
    """A pairwise-adjacent set of ``size`` vertices (in enumeration order), or ``None``."""
    f.require_decided()
    if size < 0:
        raise ValueError("size must be >= 0")
    bits = _bitsets(f)
    with _recursion_room(size):
        found = _find_clique(bits, (1 << len(f)) - 1, size, [])
    return None if found is None else [f.vertices[i] for i in found]


def independent_set(f: FinitePrefix, size: int) -> Optional[list[Hashable]]:
    """A pairwise non-adjacent set of ``size`` vertices, or ``None``."""
    f.require_decided()
    if size < 0:
        raise ValueError("size must be >= 0")
    full = (1 << len(f)) - 1
    bits = [full & ~b & ~(1 << i) for i, b in enumerate(_bitsets(f))]
    with _recursion_room(size):
        found = _find_clique(bits, full, size, [])
    return None if found is None else [f.vertices[i] for i in found]


def component_of(f: FinitePrefix, v: Hashable) -> set[Hashable]:
    f.require_decided()
    start = f.index(v)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in f.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return {f.vertices[i] for i in seen}


def is_clique(f: FinitePrefix, vs) -> bool:
    idx = [f.index(v) for v in vs]
    return len(set(idx)) == len(idx) and all(
        f.adjacency[a, b] for n, a in enumerate(idx) for b in idx[n + 1 :]
    )


def is_independent(f: FinitePrefix, vs) -> bool:
    idx = [f.index(v) for v in vs]
    return len(set(idx)) == len(idx) and not any(
        f.adjacency[a, b] for n, a in enumerate(idx) for b in idx[n + 1 :]
    )


def is_embedding(h: FinitePrefix, g: FinitePrefix, emb: dict) -> bool:
    """Injective, total on ``h``, and every edge of ``h`` lands on an edge of ``g``."""
    if set(emb) != set(h.vertices) or len(set(emb.values())) != len(emb):
        return False
    if not all(g.has_vertex(w) for w in emb.values()):
        return False
    return all(g.adjacent(emb[a], emb[b]) for a, b in h.edge_labels())


def _search_order(nbrs: list[list[int]]) -> list[int]:
    """BFS over each component, starting from its highest-degree vertex."""
    order: list[int] = []
    seen: set[int] = set()
    for comp in _components(nbrs):
        start = min(comp, key=lambda v: (-len(nbrs[v]), v))
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in nbrs[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def subgraph_embedding(h: FinitePrefix, g: FinitePrefix) -> Optional[dict[Hashable, Hashable]]:
    """An injective edge-preserving map from ``h`` into ``g`` (non-induced), or ``None``."""
    h.require_decided()
    g.require_decided()
    nh, ng = len(h), len(g)
    if nh > ng:
        return None
    if nh == 0:
        return {}
    hn = _nbr_lists(h)
    gn = _nbr_lists(g)
    gadj = g.adjacency
    hdeg = [len(x) for x in hn]
    gdeg = [len(x) for x in gn]
    if max(hdeg) > max(gdeg, default=0) or h.adjacency.sum() > g.adjacency.sum():
        return None

    order = _search_order(hn)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in hn[v] if pos[w] < pos[v]] for v in order]
    image = [-1] * nh
    used = [False] * ng

    def search(step: int) -> bool:
        if step == nh:
            return True
        v = order[step]
        earlier = back[step]
        pool = gn[image[earlier[0]]] if earlier else range(ng)
        for c in pool:
            if used[c] or gdeg[c] < hdeg[v]:
                continue
            if any(not gadj[image[w], c] for w in earlier):
                continue
            image[v] = c
            used[c] = True
            if search(step + 1):
                return True
            used[c] = False
            image[v] = -1
        return False

    with _recursion_room(nh):
        if not search(0):
            return None
    return {h.vertices[i]: g.vertices[image[i]] for i in range(nh)}


# ---------------------------------------------------------------------------
# Brute-force oracles


def iter_colorings(f: FinitePrefix, k: int) -> Iterator[dict[Hashable, int]]:
    """Every proper coloring with colors ``0..k-1``, by enumerating all ``k**n`` maps."""
    f.require_decided()
    n = len(f)
    if n > MAX_COLORING_ORACLE:
        raise SizeGuardError(f"coloring oracle limited to {MAX_COLORING_ORACLE} vertices, got {n}")
    edges = f.edges()
    for colors in product(range(max(k, 0)), repeat=n):
        if all(colors[i] != colors[j] for i, j in edges):
            yield dict(zip(f.vertices, colors))


def exhaustive_colorings(f: FinitePrefix, k: int) -> int:
    return sum(1 for _ in iter_colorings(f, k))


def exhaustive_embedding(h: FinitePrefix, g: FinitePrefix) -> Optional[dict[Hashable, Hashable]]:
    """First edge-preserving injection in lexicographic order of images, trying all of them."""
    h.require_decided()
    g.require_decided()
    if len(h) > MAX_EMBED_H or len(g) > MAX_EMBED_G:
        raise SizeGuardError(
            f"embedding oracle limited to |H| <= {MAX_EMBED_H}, |G| <= {MAX_EMBED_G}"
        )
    edges = h.edges()
    for images in permutations(range(len(g)), len(h)):
        if all(g.adjacency[images[a], images[b]] for a, b in edges):
            return {h.vertices[i]: g.vertices[images[i]] for i in range(len(h))}
    return None


def tree_path_length(t: TreeSpec, depth_bound: int, branch: int = 10) -> int:
    """Longest member chain below the root, capped at ``depth_bound``.

    Children are searched among ``sigma * <m>`` for ``m < branch``.
    """

    def longest(sigma: tuple[int, ...]) -> int:
        if len(sigma) == depth_bound:
            return 0
        best = 0
        for m in range(branch):
            tau = sigma + (m,)
            if t.member(tau):
                best = max(best, 1 + longest(tau))
                if best + len(sigma) == depth_bound:
                    break
        return best

    if not t.member(()):
        return 0
    with _recursion_room(depth_bound):
        return longest(())
