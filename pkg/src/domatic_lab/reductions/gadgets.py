"""Triangle gadgets that make domatic numbers add up.

Each operand contributes one triangle ``(v_left, u_mid, v_right)`` per gadget
copy.  Three gadget vertices are associated with every operand triangle
``T_i``: each is adjacent to all vertices of the other triangles in the copy
and to exactly two vertices of ``T_i``.  Gadget vertices are never adjacent
to each other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from ..errors import EmptyDecoration, OddLength
from ..exactset import ExactSet
from ..graph import DecoratedGraph, Graph, Partition


@dataclass(frozen=True)
class GadgetSpec:
    """For each of the three gadget vertices owned by a triangle, the position
    (0 = v_left, 1 = u_mid, 2 = v_right) of the owned-triangle vertex it skips."""

    skipped: tuple[int, int, int]


# a_1 skips v_r, a_2 skips u_qr, a_3 skips v_q (and a_4..a_6 likewise on T_2)
GADGET = GadgetSpec(skipped=(2, 1, 0))


def _disjoint_union_all(hs: Sequence[DecoratedGraph]) -> tuple[set, list[str], list[int]]:
    edges: set[tuple[int, int]] = set()
    labels: list[str] = []
    offsets = []
    shift = 0
    for idx, h in enumerate(hs, start=1):
        offsets.append(shift)
        edges.update((u + shift, v + shift) for u, v in h.graph.edges)
        labels.extend(f"H{idx}:{s}" for s in h.graph.labels)
        shift += h.n
    return edges, labels, offsets


def _wire(hs: Sequence[DecoratedGraph], spec: GadgetSpec = GADGET) -> tuple[Graph, list[list[int]]]:
    if any(not h.triangles for h in hs):
        raise EmptyDecoration("every operand needs at least one decorated triangle")
    edges, labels, offsets = _disjoint_union_all(hs)
    nxt = len(labels)
    blocks = []
    for combo in itertools.product(*(range(len(h.triangles)) for h in hs)):
        tris = [
            tuple(v + offsets[i] for v in hs[i].triangles[t]) for i, t in enumerate(combo)
        ]
        block = []
        tag = ",".join(str(t) for t in combo)
        for i, tri in enumerate(tris):
            for slot, skip in enumerate(spec.skipped):
                a = nxt
                nxt += 1
                block.append(a)
                labels.append(f"gadget a{3 * i + slot + 1}[{tag}]")
                for j, other in enumerate(tris):
                    for pos, v in enumerate(other):
                        if j == i and pos == skip:
                            continue
                        edges.add((v, a) if v < a else (a, v))
        blocks.append(block)
    return Graph(nxt, frozenset(edges), tuple(labels)), blocks


def gadget_join(h1: DecoratedGraph, h2: DecoratedGraph) -> Graph:
    """Connect every triangle pair of ``h1`` x ``h2`` through a fresh 6-vertex gadget."""
    return _wire([h1, h2])[0]


def multi_gadget_join(hs: Sequence[DecoratedGraph]) -> Graph:
    """One fresh block of ``3 * len(hs)`` gadget vertices per triangle tuple."""
    if len(hs) < 2 or len(hs) % 2:
        raise OddLength(f"need an even number (>= 2) of operands, got {len(hs)}")
    return _wire(list(hs))[0]


def gadget_vertices(hs: Sequence[DecoratedGraph]) -> list[list[int]]:
    """Vertex ids of each gadget block, in tuple order, for the joined graph."""
    return _wire(list(hs))[1]


def times(h1: DecoratedGraph, h2: DecoratedGraph) -> DecoratedGraph:
    """Gadget join that keeps both operands' triangles as the new decoration."""
    g = gadget_join(h1, h2)
    shift = h1.n
    tris = h1.triangles + tuple(tuple(v + shift for v in t) for t in h2.triangles)
    return DecoratedGraph(g, tris)


def parity_pair(hs: Sequence[DecoratedGraph]) -> tuple[DecoratedGraph, DecoratedGraph]:
    """Left folds of ``times`` over the odd- and even-positioned operands (1-based)."""
    if len(hs) < 2 or len(hs) % 2:
        raise OddLength(f"need an even number (>= 2) of operands, got {len(hs)}")
    return reduce(times, hs[0::2]), reduce(times, hs[1::2])


def exact_mk_set(k: int) -> ExactSet:
    """The k odd values 4k+1, 4k+3, ..., 6k-1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return ExactSet(tuple(range(4 * k + 1, 6 * k, 2)))


def lift_domatic_partition(hs: Sequence[DecoratedGraph], parts: Sequence[Partition]) -> Partition:
    """Combine domatic partitions of the operands into one of the gadget join.

    Operand ``i`` contributes its classes unchanged (renumbered after the
    previous operands').  In every gadget block, the three vertices owned by
    operand ``i``'s triangle go to operand ``i``'s classes: a class meeting
    the triangle in a single vertex ``x`` takes the gadget vertex that skips
    ``x``, and every class takes at least one, so it also dominates the other
    operands' triangles.  Requires every class to meet every decorated
    triangle, which holds for domatic partitions of Kaplan-Shamir images.
    """
    g, blocks = _wire(list(hs))
    _, _, offsets = _disjoint_union_all(hs)
    class_of = [-1] * g.n
    bases = []
    base = 0
    for p, off in zip(parts, offsets):
        bases.append(base)
        for v, c in enumerate(p.class_of):
            class_of[v + off] = base + c
        base += p.k
    combos = itertools.product(*(range(len(h.triangles)) for h in hs))
    for block, combo in zip(blocks, combos):
        for i, t in enumerate(combo):
            tri = [v + offsets[i] for v in hs[i].triangles[t]]
            owned = block[3 * i: 3 * i + 3]
            own_classes = range(bases[i], bases[i] + parts[i].k)
            placed: dict[int, int] = {}
            for c in own_classes:
                hit = [pos for pos, v in enumerate(tri) if class_of[v] == c]
                if len(hit) == 1:
                    slot = GADGET.skipped.index(hit[0])
                    placed[owned[slot]] = c
            rest = [a for a in owned if a not in placed]
            hungry = [c for c in own_classes if c not in placed.values()]
            for a in rest:
                placed[a] = hungry.pop(0) if hungry else bases[i]
            if hungry:
                raise ValueError(f"operand {i} has more classes than gadget slots")
            for a, c in placed.items():
                class_of[a] = c
    return Partition(base, tuple(class_of))
