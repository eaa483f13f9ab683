"""DIMACS edge format and JSON serialization for graphs and partitions."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import HeaderMismatch, ParseError, PartitionMismatch
from .graph import DecoratedGraph, Graph, Partition, build_graph


def read_dimacs(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` text (1-based ids, ``c`` comments)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"expected 'p edge n m', got {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer header field in {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative header field", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    if len(edges) != m:
        raise HeaderMismatch(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph | DecoratedGraph) -> dict[str, Any]:
    tris = None
    if isinstance(g, DecoratedGraph):
        tris = [list(t) for t in g.triangles]
        g = g.graph
    out: dict[str, Any] = {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "labels": list(g.labels),
    }
    if tris is not None:
        out["triangles"] = tris
    return out


def graph_from_json(data: dict[str, Any]) -> Graph | DecoratedGraph:
    try:
        g = build_graph(int(data["n"]), [tuple(e) for e in data["edges"]], data.get("labels"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None
    if "triangles" in data:
        return DecoratedGraph(g, tuple(tuple(t) for t in data["triangles"]))
    return g


def partition_to_json(p: Partition) -> dict[str, Any]:
    return {"k": p.k, "class_of": list(p.class_of)}


def partition_from_json(data: dict[str, Any]) -> Partition:
    try:
        return Partition(int(data["k"]), tuple(int(c) for c in data["class_of"]))
    except (KeyError, TypeError) as exc:
        raise PartitionMismatch(f"malformed partition JSON: {exc}") from None


def load_graph(path: str | Path) -> Graph | DecoratedGraph:
    """Load a graph from ``.json`` or DIMACS text, chosen by extension."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return graph_from_json(data)
    return read_dimacs(text)


def plain(g: Graph | DecoratedGraph) -> Graph:
    return g.graph if isinstance(g, DecoratedGraph) else g
