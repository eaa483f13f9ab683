"""Immutable simple undirected graphs and the structural operations on them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    EndpointOutOfRange,
    GraphError,
    PartitionMismatch,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is stored as a frozenset of ``(u, v)`` pairs with ``u < v``.
    Use :func:`build_graph` to construct from raw input; it reports duplicate
    edges, which the set representation would otherwise swallow.
    """

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] = ()
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise EndpointOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise GraphError(f"{len(self.labels)} labels for {self.n} vertices")
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    def __eq__(self, other):
        # labels are advisory metadata and do not take part in equality
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges, tuple(labels))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the order given."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = frozenset(
            _norm(index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(vs), edges, tuple(self.labels[v] for v in vs))


def build_graph(n: int, edges: Iterable[Iterable[int]], labels: Sequence[str] | None = None) -> Graph:
    seen: set[Edge] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        key = _norm(u, v)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, frozenset(seen), tuple(labels) if labels else ())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a cycle on ``1..rim``."""
    rim_edges = {_norm(1 + i, 1 + (i + 1) % rim) for i in range(rim)}
    spokes = {(0, 1 + i) for i in range(rim)}
    return Graph(rim + 1, frozenset(rim_edges | spokes))


def degree_stats(g: Graph) -> tuple[int, int]:
    if g.n == 0:
        raise EmptyGraph("degree statistics of the empty graph")
    degs = [len(a) for a in g.adj]
    return min(degs), max(degs)


def _combine(a: Graph, b: Graph, cross: bool) -> Graph:
    shift = a.n
    edges = set(a.edges)
    edges.update((u + shift, v + shift) for u, v in b.edges)
    if cross:
        edges.update((u, v + shift) for u in range(a.n) for v in range(b.n))
    labels = tuple(f"A:{s}" for s in a.labels) + tuple(f"B:{s}" for s in b.labels)
    return Graph(a.n + b.n, frozenset(edges), labels)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus every edge between them."""
    return _combine(a, b, cross=True)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return _combine(a, b, cross=False)


def _check_vertices(g: Graph, vs: Iterable[int]) -> set[int]:
    out = set()
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
        out.add(v)
    return out


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    ds = _check_vertices(g, d)
    return all(v in ds or not g.adj[v].isdisjoint(ds) for v in range(g.n))


def has_isolated_vertex(g: Graph) -> bool:
    return any(not a for a in g.adj)


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring found by BFS per component, or None for odd cycles."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_two_colorable(g: Graph) -> bool:
    return two_coloring(g) is not None


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class DecoratedGraph:
    """A graph together with an ordered list of distinguished triangles.

    Triangles are stored as ``(v_left, u_mid, v_right)``.
    """

    graph: Graph
    triangles: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        g = self.graph
        for tri in self.triangles:
            a, b, c = tri
            if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
                raise GraphError(f"{tri} does not induce a triangle")

    @property
    def n(self) -> int:
        return self.graph.n

    def covered_vertices(self) -> set[int]:
        return {v for tri in self.triangles for v in tri}


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to one of ``k`` classes; classes may be empty."""

    k: int
    class_of: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise PartitionMismatch(f"class count must be >= 1, got {self.k}")
        for v, c in enumerate(self.class_of):
            if not 0 <= c < self.k:
                raise PartitionMismatch(f"vertex {v} has class {c} outside 0..{self.k - 1}")

    @classmethod
    def from_classes(cls, k: int, classes: Sequence[Iterable[int]], n: int) -> "Partition":
        class_of = [-1] * n
        for c, members in enumerate(classes):
            for v in members:
                if class_of[v] != -1:
                    raise PartitionMismatch(f"vertex {v} placed twice")
                class_of[v] = c
        if -1 in class_of:
            raise PartitionMismatch(f"vertex {class_of.index(-1)} left unassigned")
        return cls(k, tuple(class_of))

    def classes(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            out[c].add(v)
        return out
