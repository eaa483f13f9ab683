"""Built-in, versioned instance corpora and seeded generators.

Everything here is a pure function of its seed, so campaign runs are
reproducible without network access or data files.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import networkx as nx

from .cfsp import TaskMatrix
from .graph import Graph, build_graph, complete_graph, cycle_graph, has_isolated_vertex, is_two_colorable, wheel_graph
from .sat import Cnf3, Lit, TripleSystem, nae3_decide, one_in_three_decide

CORPUS_VERSION = 1


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def atlas_graphs(max_n: int = 6) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            out.append(build_graph(h.number_of_nodes(), list(h.edges())))
    return out


def small_graphs(seed: int, count: int = 500, max_n: int = 6) -> list[Graph]:
    """The full atlas up to ``max_n`` vertices, topped up with seeded random graphs.

    Only 208 isomorphism classes exist on 1..6 vertices, so the remainder are
    random labeled graphs (distinct as labeled graphs). A ``count`` below the
    atlas size keeps the first ``count`` atlas entries.
    """
    graphs = atlas_graphs(max_n)[:count]
    seen = set(graphs)
    rng = random.Random(seed)
    while len(graphs) < count:
        g = random_graph(rng.randint(1, max_n), rng.choice((0.3, 0.5, 0.7)), rng)
        if g not in seen:
            seen.add(g)
            graphs.append(g)
    return graphs


def lemma3_graphs(seed: int, extra: int = 20, max_n: int = 6) -> list[tuple[str, Graph]]:
    """K3, C5, K4, W5 and seeded non-bipartite graphs without isolated vertices."""
    named = [
        ("K3", complete_graph(3)),
        ("C5", cycle_graph(5)),
        ("K4", complete_graph(4)),
        ("W5", wheel_graph(5)),
    ]
    rng = random.Random(seed)
    seen = {g for _, g in named}
    i = 0
    while i < extra:
        g = random_graph(rng.randint(3, max_n), rng.choice((0.5, 0.7)), rng)
        if g in seen or has_isolated_vertex(g) or is_two_colorable(g):
            continue
        seen.add(g)
        i += 1
        named.append((f"rand{i}", g))
    return named


def reference_nae_pair() -> tuple[Cnf3, Cnf3]:
    """(x1 | ~x2 | x3) & (~x1 | x2 | x3)  and  (y1 | y2 | y3) & (~y1 | ~y2 | ~y3)."""
    h1 = Cnf3(3, ((Lit(0), Lit(1, True), Lit(2)), (Lit(0, True), Lit(1), Lit(2))))
    h2 = Cnf3(3, ((Lit(0), Lit(1), Lit(2)), (Lit(0, True), Lit(1, True), Lit(2, True))))
    return h1, h2


def _random_formula(rng: random.Random, max_vars: int, max_clauses: int) -> Cnf3:
    nv = rng.randint(1, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = tuple(
        tuple(Lit(rng.randrange(nv), rng.random() < 0.5) for _ in range(3)) for _ in range(m)
    )
    return Cnf3(nv, clauses)


def _sample(rng, make, want_sat: bool, decide):
    while True:
        f = make()
        if decide(f) == want_sat:
            return f


def nae_pairs(seed: int, count: int = 21, max_vars: int = 4, max_clauses: int = 2) -> list[tuple[Cnf3, Cnf3]]:
    """Seeded formula pairs cycling through (sat,sat), (sat,unsat), (unsat,sat), (unsat,unsat)."""
    rng = random.Random(seed)
    make = lambda: _random_formula(rng, max_vars, max_clauses)  # noqa: E731
    nae = lambda f: nae3_decide(f).sat  # noqa: E731
    combos = [(True, True), (True, False), (False, True), (False, False)]
    return [
        (_sample(rng, make, a, nae), _sample(rng, make, b, nae))
        for a, b in (combos[i % 4] for i in range(count))
    ]


def _random_system(rng: random.Random, max_vars: int, max_sets: int, distinct: bool) -> TripleSystem:
    nv = rng.randint(3 if distinct else 1, max_vars)
    m = rng.randint(1, max_sets)
    if distinct:
        sets = tuple(tuple(Lit(v) for v in rng.sample(range(nv), 3)) for _ in range(m))
    else:
        sets = tuple(tuple(Lit(rng.randrange(nv)) for _ in range(3)) for _ in range(m))
    return TripleSystem(nv, sets)


def triple_systems(seed: int, per_class: int = 10, max_vars: int = 4, max_sets: int = 4) -> dict[bool, list[TripleSystem]]:
    """``per_class`` satisfiable and ``per_class`` unsatisfiable positive systems.

    Unsatisfiable systems over distinct members are rare at this size, so
    repeated members are allowed; the oracle counts multiplicity.
    """
    rng = random.Random(seed)
    out: dict[bool, list[TripleSystem]] = {True: [], False: []}
    seen: set = set()
    while min(len(v) for v in out.values()) < per_class:
        s = _random_system(rng, max_vars, max_sets, distinct=rng.random() < 0.5)
        key = (s.num_vars, s.sets)
        if key in seen:
            continue
        seen.add(key)
        sat = one_in_three_decide(s).sat
        if len(out[sat]) < per_class:
            out[sat].append(s)
    return out


def single_triple() -> TripleSystem:
    """{x, y, z}: satisfiable."""
    return TripleSystem(3, ((Lit(0), Lit(1), Lit(2)),))


def all_triples_on_four() -> TripleSystem:
    """Every 3-subset of four variables: unsatisfiable (each variable lies in three sets)."""
    return TripleSystem(4, tuple(tuple(Lit(v) for v in s) for s in itertools.combinations(range(4), 3)))


def repeated_triple() -> TripleSystem:
    """{x, x, x}: unsatisfiable, with the smallest possible image graph."""
    return TripleSystem(1, ((Lit(0), Lit(0), Lit(0)),))


def reference_triple_system() -> TripleSystem:
    """{x,y,z}, {v,w,x}, {u,w,z} with x,y,z,v,w,u numbered 0..5."""
    return TripleSystem(6, tuple(tuple(Lit(v) for v in s) for s in [(0, 1, 2), (3, 4, 0), (5, 4, 2)]))


def all_matrices(n: int, m: int) -> list[TaskMatrix]:
    out = []
    for bits in itertools.product((0, 1), repeat=n * m):
        out.append(TaskMatrix(tuple(bits[j * m:(j + 1) * m] for j in range(n))))
    return out


def random_matrices(seed: int, count: int, n: int, m: int, max_tasks: int) -> list[TaskMatrix]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        tm = TaskMatrix(tuple(tuple(int(rng.random() < 0.5) for _ in range(m)) for _ in range(n)))
        if len(tm.tasks()) <= max_tasks:
            out.append(tm)
    return out


def small_matrix_universe(max_n: int = 2, max_m: int = 2) -> list[TaskMatrix]:
    return [tm for n in range(1, max_n + 1) for m in range(1, max_m + 1) for tm in all_matrices(n, m)]


@dataclass(frozen=True)
class JoinPair:
    a: Graph
    b: Graph


def join_pairs(seed: int, count: int = 50, max_n: int = 4) -> list[JoinPair]:
    rng = random.Random(seed)
    return [
        JoinPair(random_graph(rng.randint(1, max_n), 0.5, rng), random_graph(rng.randint(1, max_n), 0.5, rng))
        for _ in range(count)
    ]
