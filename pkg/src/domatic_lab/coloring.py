"""Classic sequential backtracking colorer, kept independent of the partition solver."""
from __future__ import annotations

from .graph import Graph


def k_coloring(g: Graph, k: int) -> list[int] | None:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    coloring = [-1] * g.n

    def rec(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        forbidden = {coloring[w] for w in g.adj[v]}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            coloring[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        coloring[v] = -1
        return False

    return coloring if rec(0, 0) else None


def chromatic_number_classic(g: Graph) -> int:
    k = 1
    while k_coloring(g, k) is None:
        k += 1
    return k
