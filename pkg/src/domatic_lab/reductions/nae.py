"""Two NAE-3-SAT formulas to one graph whose (N+, N+)-partition number is 4/3/2."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ..graph import Graph
from ..sat import Cnf3, nae_closure, pad_for_nae

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NaeLayout:
    """Vertex ids of every role in the constructed graph (0-based indices)."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    x: tuple[int, ...]
    x_bar: tuple[int, ...]
    y: tuple[int, ...]
    y_bar: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]  # u[i][j]
    c_hat: tuple[int, ...]
    c_check: tuple[int, ...]
    d_hat: tuple[int, ...]
    d_check: tuple[int, ...]
    f1: Cnf3
    f2: Cnf3

    def x_lit(self, lit) -> int:
        return self.x_bar[lit.var] if lit.neg else self.x[lit.var]

    def y_lit(self, lit) -> int:
        return self.y_bar[lit.var] if lit.neg else self.y[lit.var]


def nae_layout(f1: Cnf3, f2: Cnf3) -> tuple[Graph, NaeLayout]:
    """Build the graph together with its role layout.

    Both formulas are padded first (at least two variables, every variable
    occurring); the two variable namespaces are disjoint by construction.
    """
    f1, notes1 = pad_for_nae(f1)
    f2, notes2 = pad_for_nae(f2)
    for note in notes1:
        log.info("H1 %s", note)
    for note in notes2:
        log.info("H2 %s", note)
    n, r = f1.num_vars, f2.num_vars
    c_all = nae_closure(f1).clauses
    d_all = nae_closure(f2).clauses

    labels: list[str] = []

    def new(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    a = tuple(new(f"a{i + 1}") for i in range(8))
    b = tuple(new(f"b{i + 1}") for i in range(8))
    x, x_bar = [], []
    for i in range(n):
        x.append(new(f"x{i + 1}"))
        x_bar.append(new(f"~x{i + 1}"))
    y, y_bar = [], []
    for j in range(r):
        y.append(new(f"y{j + 1}"))
        y_bar.append(new(f"~y{j + 1}"))
    u = tuple(tuple(new(f"u{i + 1},{j + 1}") for j in range(r)) for i in range(n))
    m, s = f1.m, f2.m
    c_ids = [new(f"c{i + 1}" if i < m else f"~c{i - m + 1}") for i in range(2 * m)]
    d_ids = [new(f"d{j + 1}" if j < s else f"~d{j - s + 1}") for j in range(2 * s)]

    edges: set[tuple[int, int]] = set()

    def link(p: int, q: int):
        edges.add((p, q) if p < q else (q, p))

    for clique in (a, b):
        for i, p in enumerate(clique):
            for q in clique[i + 1:]:
                link(p, q)
    for v in x + x_bar:
        link(v, a[0])
        link(v, a[1])
    for v in y + y_bar:
        link(v, b[0])
        link(v, b[1])
    for i in range(n):
        for j in range(r):
            for v in (x[i], x_bar[i], y[j], y_bar[j]):
                link(u[i][j], v)
    for cid, clause in zip(c_ids, c_all):
        link(cid, a[0])
        link(cid, a[1])
        for lit in clause:
            link(cid, x_bar[lit.var] if lit.neg else x[lit.var])
    for did, clause in zip(d_ids, d_all):
        link(did, b[0])
        link(did, b[1])
        for lit in clause:
            link(did, y_bar[lit.var] if lit.neg else y[lit.var])

    g = Graph(len(labels), frozenset(edges), tuple(labels))
    layout = NaeLayout(
        a, b, tuple(x), tuple(x_bar), tuple(y), tuple(y_bar), u,
        tuple(c_ids[:m]), tuple(c_ids[m:]), tuple(d_ids[:s]), tuple(d_ids[s:]),
        f1, f2,
    )
    return g, layout


def nae_construct(f1: Cnf3, f2: Cnf3) -> Graph:
    return nae_layout(f1, f2)[0]
