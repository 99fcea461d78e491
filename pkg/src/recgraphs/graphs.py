"""Lazy infinite graphs given by three-valued edge oracles, and finite windows onto them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from .codes import decode, seq_str
from .errors import BudgetExhausted, ColoringError, VertexError

__all__ = [
    "Nat",
    "Row",
    "CliqueExtra",
    "Special",
    "SeqV",
    "T0",
    "TriAux",
    "CycleV",
    "label",
    "component_tag",
    "TriEdge",
    "ComputableGraph",
    "FinitePrefix",
    "edge_at",
    "extract",
    "prefix",
    "is_valid_coloring",
    "to_dot",
    "to_json",
    "from_json",
]


# ---------------------------------------------------------------------------
# Vertex labels


@dataclass(frozen=True, order=True)
class Nat:
    n: int

    def __str__(self) -> str:
        return str(self.n)


@dataclass(frozen=True, order=True)
class Row:
    m: int
    j: int

    def __str__(self) -> str:
        return f"v{self.m},{self.j}"


@dataclass(frozen=True, order=True)
class CliqueExtra:
    m: int
    i: int

    def __str__(self) -> str:
        return f"c{self.m},{self.i}"


@dataclass(frozen=True, order=True)
class Special:
    i: int

    def __str__(self) -> str:
        return f"s{self.i}"


@dataclass(frozen=True, order=True)
class SeqV:
    code: int

    @property
    def seq(self) -> tuple[int, ...]:
        return decode(self.code)

    def __str__(self) -> str:
        return f"<{seq_str(self.seq)}>"


@dataclass(frozen=True, order=True)
class T0:
    e: int

    def __str__(self) -> str:
        return f"t0@{self.e}"


@dataclass(frozen=True, order=True)
class TriAux:
    """One of the two triangle vertices next to ``T0(e)``."""

    e: int
    i: int

    def __str__(self) -> str:
        return f"a{self.i}@{self.e}"


@dataclass(frozen=True, order=True)
class CycleV:
    """Vertex ``pos`` of the cycle C(e, sigma, k); ``code`` encodes sigma."""

    e: int
    code: int
    k: int
    pos: int

    def __str__(self) -> str:
        return f"C{self.e}:<{seq_str(decode(self.code))}>:{self.k}:{self.pos}"


def label(v: Hashable) -> str:
    return str(v)


def component_tag(v: Hashable) -> Optional[int]:
    """The disjoint-union index carried by a vertex, if any."""
    return getattr(v, "e", None)


class TriEdge(Enum):
    EDGE = "edge"
    NO_EDGE = "no-edge"
    PENDING = "pending"

    @classmethod
    def of(cls, flag: bool) -> "TriEdge":
        return cls.EDGE if flag else cls.NO_EDGE


# ---------------------------------------------------------------------------
# Computable graphs


Oracle = Callable[[Hashable, Hashable, int], TriEdge]


@dataclass(frozen=True)
class ComputableGraph:
    """A countable graph given by an enumeration and a stage-bounded edge oracle.

    ``vertices`` returns a fresh iterator over the enumeration (possibly
    finite).  ``contains`` decides universe membership.  ``oracle`` is only
    called on distinct members; use :func:`edge_at` for the checked entry
    point.
    """

    name: str
    vertices: Callable[[], Iterator[Hashable]]
    contains: Callable[[Hashable], bool]
    oracle: Oracle

    def take(self, count: int) -> list[Hashable]:
        return list(islice(self.vertices(), count))


def edge_at(g: ComputableGraph, u: Hashable, v: Hashable, budget: int) -> TriEdge:
    for w in (u, v):
        if not g.contains(w):
            raise VertexError(f"{w!s} is not a vertex of {g.name}")
    if u == v:
        return TriEdge.NO_EDGE
    return g.oracle(u, v, budget)


# ---------------------------------------------------------------------------
# Finite prefixes


@dataclass(frozen=True, eq=False)
class FinitePrefix:
    """An explicit finite graph cut out of a :class:`ComputableGraph`.

    ``adjacency`` is a read-only symmetric boolean matrix; pairs listed in
    ``undecided`` (index pairs ``i < j``) were Pending and are not edges.
    """

    vertices: tuple[Hashable, ...]
    adjacency: np.ndarray
    undecided: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        adj = np.array(self.adjacency, dtype=bool).reshape(len(self.vertices), len(self.vertices))
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise ValueError("adjacency must be irreflexive")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        und = tuple(sorted((min(i, j), max(i, j)) for i, j in self.undecided))
        object.__setattr__(self, "undecided", und)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertices")

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[Hashable] | int,
        edges: Iterable[tuple[Hashable, Hashable]],
        undecided: Iterable[tuple[Hashable, Hashable]] = (),
    ) -> "FinitePrefix":
        """Build a prefix from vertex labels (or a count of ``Nat`` vertices) and edges."""
        if isinstance(vertices, int):
            vertices = [Nat(i) for i in range(vertices)]
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}

        def idx(v):
            if v in index:
                return index[v]
            if isinstance(v, int) and Nat(v) in index:
                return index[Nat(v)]
            raise VertexError(f"{v!s} not among the vertices")

        adj = np.zeros((len(vertices), len(vertices)), dtype=bool)
        for u, v in edges:
            i, j = idx(u), idx(v)
            if i == j:
                raise ValueError("self-loops are not allowed")
            adj[i, j] = adj[j, i] = True
        und = [(idx(u), idx(v)) for u, v in undecided]
        return cls(vertices, adj, tuple(und))

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePrefix):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and np.array_equal(self.adjacency, other.adjacency)
            and self.undecided == other.undecided
        )

    def __repr__(self) -> str:
        return (
            f"FinitePrefix(n={len(self)}, edges={int(self.adjacency.sum()) // 2}, "
            f"undecided={len(self.undecided)})"
        )

    @property
    def decided(self) -> bool:
        return not self.undecided

    def require_decided(self) -> None:
        if self.undecided:
            i, j = self.undecided[0]
            raise BudgetExhausted(
                f"{len(self.undecided)} undecided pair(s), e.g. "
                f"({self.vertices[i]!s}, {self.vertices[j]!s})"
            )

    def index(self, v: Hashable) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise VertexError(f"{v!s} is not in this prefix") from None

    def has_vertex(self, v: Hashable) -> bool:
        return v in self._index

    def edges(self) -> list[tuple[int, int]]:
        ii, jj = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(i), int(j)) for i, j in zip(ii, jj)]

    def edge_labels(self) -> list[tuple[Hashable, Hashable]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges()]

    def neighbors(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def adjacent(self, u: Hashable, v: Hashable) -> bool:
        return bool(self.adjacency[self.index(u), self.index(v)])

    def subgraph(self, keep: Iterable[Hashable]) -> "FinitePrefix":
        """Induced subgraph on ``keep``, in this prefix's enumeration order."""
        idx = sorted({self.index(v) for v in keep})
        sel = np.array(idx, dtype=int)
        adj = self.adjacency[np.ix_(sel, sel)] if idx else np.zeros((0, 0), dtype=bool)
        pos = {old: new for new, old in enumerate(idx)}
        und = [(pos[i], pos[j]) for i, j in self.undecided if i in pos and j in pos]
        return FinitePrefix(tuple(self.vertices[i] for i in idx), adj, tuple(und))

    def head(self, count: int) -> "FinitePrefix":
        return self.subgraph(self.vertices[:count])


def extract(g: ComputableGraph, vertices: Sequence[Hashable], budget: int) -> FinitePrefix:
    """Query every pair of ``vertices`` at ``budget``."""
    vertices = tuple(vertices)
    for v in vertices:
        if not g.contains(v):
            raise VertexError(f"{v!s} is not a vertex of {g.name}")
    n = len(vertices)
    adj = np.zeros((n, n), dtype=bool)
    undecided = []
    for i in range(n):
        for j in range(i + 1, n):
            r = g.oracle(vertices[i], vertices[j], budget)
            if r is TriEdge.EDGE:
                adj[i, j] = adj[j, i] = True
            elif r is TriEdge.PENDING:
                undecided.append((i, j))
    return FinitePrefix(vertices, adj, tuple(undecided))


def prefix(g: ComputableGraph, count: int, budget: int) -> FinitePrefix:
    """The first ``count`` vertices of ``g`` (fewer if ``g`` is finite) with all pairs queried."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return extract(g, g.take(count), budget)


def is_valid_coloring(f: FinitePrefix, coloring: Mapping[Hashable, int]) -> bool:
    f.require_decided()
    missing = [v for v in f.vertices if v not in coloring]
    if missing:
        raise ColoringError(f"coloring undefined on {missing[0]!s}")
    colors = np.array([coloring[v] for v in f.vertices])
    ii, jj = np.nonzero(np.triu(f.adjacency, 1))
    return bool(np.all(colors[ii] != colors[jj]))


# ---------------------------------------------------------------------------
# Export


def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(f: FinitePrefix, name: str = "G") -> str:
    lines = [f"graph {_q(name)} {{"]
    for v in f.vertices:
        lines.append(f"  {_q(label(v))};")
    for i, j in f.edges():
        lines.append(f"  {_q(label(f.vertices[i]))} -- {_q(label(f.vertices[j]))};")
    for i, j in f.undecided:
        lines.append(
            f"  {_q(label(f.vertices[i]))} -- {_q(label(f.vertices[j]))} [style=dashed];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(f: FinitePrefix) -> str:
    return json.dumps(
        {
            "vertices": [label(v) for v in f.vertices],
            "edges": [[i, j] for i, j in f.edges()],
            "undecided": [[i, j] for i, j in f.undecided],
        },
        indent=None,
    )


def from_json(text: str) -> FinitePrefix:
    """Parse the JSON export; vertices come back as their label strings."""
    data = json.loads(text)
    try:
        verts = [str(v) for v in data["vertices"]]
        n = len(verts)
        adj = np.zeros((n, n), dtype=bool)
        for i, j in data.get("edges", []):
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad edge [{i}, {j}]")
            adj[i, j] = adj[j, i] = True
        und = [tuple(p) for p in data.get("undecided", [])]
        for i, j in und:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad undecided pair [{i}, {j}]")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    return FinitePrefix(tuple(verts), adj, tuple(und))
