"""One-in-three SAT to ({0,1}, N)-partitions, and the doubled join built on it."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotAnImage
from ..graph import Graph, disjoint_union, join
from ..quantities import alpha, beta
from ..sat import TripleSystem


@dataclass(frozen=True)
class HtParts:
    cliques: tuple[tuple[int, int, int, int], ...]  # (member1, member2, member3, a_i)
    literal_edges: dict  # Lit -> (endpoint, endpoint)
    s: int
    t: tuple[int, int, int]


def ht_parts(system: TripleSystem) -> tuple[Graph, HtParts]:
    """Graph plus vertex roles.

    Per set ``S_i``: a 4-clique of three member vertices and ``a_i``.  Per
    distinct literal: an edge whose endpoints both see every member vertex
    standing for that literal.  Finally a 4-clique ``s, t1, t2, t3`` with
    ``s`` adjacent to every ``a_i``.
    """
    system.require_positive()
    labels: list[str] = []

    def new(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    edges: set[tuple[int, int]] = set()

    def link(p: int, q: int):
        edges.add((p, q) if p < q else (q, p))

    cliques = []
    for i, triple in enumerate(system.sets, start=1):
        members = [new(f"S{i}:x{lit.var + 1}") for lit in triple]
        ai = new(f"a{i}")
        quad = (*members, ai)
        for p in range(4):
            for q in range(p + 1, 4):
                link(quad[p], quad[q])
        cliques.append(quad)
    lit_edges = {}
    for lit in system.literals():
        e1 = new(f"e_x{lit.var + 1}'")
        e2 = new(f"e_x{lit.var + 1}''")
        link(e1, e2)
        lit_edges[lit] = (e1, e2)
    for quad, triple in zip(cliques, system.sets):
        for member, lit in zip(quad, triple):
            for end in lit_edges[lit]:
                link(member, end)
    s = new("s")
    t = tuple(new(f"t{i}") for i in (1, 2, 3))
    quad = (s, *t)
    for p in range(4):
        for q in range(p + 1, 4):
            link(quad[p], quad[q])
    for c in cliques:
        link(s, c[3])
    g = Graph(len(labels), frozenset(edges), tuple(labels))
    return g, HtParts(tuple(cliques), lit_edges, s, t)


def ht_one_in_three(system: TripleSystem) -> Graph:
    return ht_parts(system)[0]


def thm6_construct(s1: TripleSystem, s2: TripleSystem) -> Graph:
    """``(f(S1) u f(S1)) + (f(S2) u f(S2))`` where ``+`` is the join."""
    g1 = ht_one_in_three(s1)
    g2 = ht_one_in_three(s2)
    return join(disjoint_union(g1, g1), disjoint_union(g2, g2))


def beta_equals_alpha_check(
    g: Graph, source: TripleSystem | tuple[TripleSystem, TripleSystem], budget: float | None = None
) -> bool:
    """Compare alpha and beta on a graph built from ``source``.

    ``source`` is the triple system (or pair, for the join construction) the
    graph claims to come from; the graph is rebuilt and compared edge for
    edge, and anything else is refused.
    """
    if isinstance(source, TripleSystem):
        expected = ht_one_in_three(source)
    else:
        expected = thm6_construct(*source)
    if expected != g:
        raise NotAnImage("graph is not the image of the given triple system(s)")
    a = alpha(g, budget)
    return beta(g, budget) == a
