"""Neighbor-count constraint sets and the (sigma, rho)-set predicates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError, PartitionMismatch, VertexOutOfRange
from .graph import Graph, Partition

INF = float("inf")


@dataclass(frozen=True)
class SigmaRhoSpec:
    """Set of allowed neighbor counts: ``finite_members`` plus ``[cofinite_from, inf)``."""

    finite_members: frozenset[int] = frozenset()
    cofinite_from: int | None = None
    name: str = ""

    def __contains__(self, count: int) -> bool:
        if count in self.finite_members:
            return True
        return self.cofinite_from is not None and count >= self.cofinite_from

    @property
    def min_member(self) -> int:
        cands = list(self.finite_members)
        if self.cofinite_from is not None:
            cands.append(self.cofinite_from)
        return min(cands)

    @property
    def max_member(self) -> float:
        if self.cofinite_from is not None:
            return INF
        return max(self.finite_members)

    def next_member(self, lo: int) -> float:
        """Smallest member >= ``lo`` (``inf`` if none)."""
        best = INF
        for f in self.finite_members:
            if lo <= f < best:
                best = f
        if self.cofinite_from is not None:
            best = min(best, max(lo, self.cofinite_from))
        return best

    def meets(self, lo: int, hi: int) -> bool:
        return self.next_member(lo) <= hi

    def __str__(self):
        return self.name or repr(self)


NATURALS = SigmaRhoSpec(frozenset(), 0, "N")
POSITIVE = SigmaRhoSpec(frozenset(), 1, "N+")
ZERO = SigmaRhoSpec(frozenset({0}), None, "0")
ONE = SigmaRhoSpec(frozenset({1}), None, "1")
ZERO_ONE = SigmaRhoSpec(frozenset({0, 1}), None, "01")

MENU = {s.name: s for s in (NATURALS, POSITIVE, ZERO, ONE, ZERO_ONE)}


def parse_spec(token: str) -> SigmaRhoSpec:
    """CLI tokens: ``N``, ``N+``, ``0``, ``1``, ``01``."""
    try:
        return MENU[token.strip()]
    except KeyError:
        raise ParseError(f"unknown sigma/rho token {token!r}; expected one of {sorted(MENU)}") from None


def is_sigma_rho_set(g: Graph, u: Iterable[int], sigma: SigmaRhoSpec, rho: SigmaRhoSpec) -> bool:
    members = set(u)
    for v in members:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    for v in range(g.n):
        inside = len(g.adj[v] & members)
        if inside not in (sigma if v in members else rho):
            return False
    return True


def check_partition(g: Graph, p: Partition, sigma: SigmaRhoSpec, rho: SigmaRhoSpec) -> bool:
    """True iff every class of ``p``, empty ones included, is a (sigma, rho)-set."""
    if len(p.class_of) != g.n:
        raise PartitionMismatch(f"partition covers {len(p.class_of)} vertices, graph has {g.n}")
    return all(is_sigma_rho_set(g, cls, sigma, rho) for cls in p.classes())


def classify(sigma: SigmaRhoSpec, rho: SigmaRhoSpec) -> str | None:
    """``"min"``, ``"max"`` or None according to the monotonicity facts for the menu."""
    if rho in (NATURALS, ZERO_ONE):
        return "min"
    if rho == POSITIVE and sigma in (NATURALS, POSITIVE):
        return "max"
    return None
