"""Edge-subdivision-plus-clique map from 3-colorability to the domatic number."""
from __future__ import annotations

from ..errors import IsolatedVertex, TwoColorable
from ..graph import DecoratedGraph, Graph, has_isolated_vertex, is_two_colorable


def kaplan_shamir(g: Graph) -> DecoratedGraph:
    """Put a fresh vertex on every edge and turn the original vertices into a clique.

    Original vertex ``i`` keeps id ``i``; the vertex subdividing the ``e``-th
    edge (lexicographic order) gets id ``n + e``.  The result is decorated
    with one triangle ``(v_i, u_ij, v_j)`` per original edge, in that order.
    The domatic number of the image is 3 if ``g`` is 3-colorable and 2
    otherwise.
    """
    if has_isolated_vertex(g):
        raise IsolatedVertex("Kaplan-Shamir input must not have isolated vertices")
    if is_two_colorable(g):
        raise TwoColorable("Kaplan-Shamir input must not be 2-colorable")
    n = g.n
    edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
    labels = [f"v{i + 1}" for i in range(n)]
    triangles = []
    for e, (i, j) in enumerate(g.sorted_edges()):
        u = n + e
        labels.append(f"u{i + 1},{j + 1}")
        edges.add((i, u))
        edges.add((j, u))
        triangles.append((i, u, j))
    h = Graph(n + g.m, frozenset(edges), tuple(labels))
    return DecoratedGraph(h, tuple(triangles))
