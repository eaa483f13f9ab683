"""Domatic number and its relatives, all computed through the partition solver.

Every function takes one wall-clock ``budget`` (seconds, None for unlimited)
covering the whole ascent over ``k``, and raises :class:`TimedOut` when it
runs out.
"""
from __future__ import annotations

import time
from typing import Iterable

from .errors import ContiguousSet, EmptyGraph, NotMonotone, TimedOut
from .exactset import ExactSet
from .graph import Graph, degree_stats
from .sigma_rho import NATURALS, ONE, POSITIVE, ZERO, ZERO_ONE, SigmaRhoSpec, classify
from .solver import SolveResult, Status, exists_partition


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget

    def remaining(self) -> float | None:
        if self.deadline is None:
            return None
        left = self.deadline - time.monotonic()
        if left <= 0:
            raise TimedOut("budget exhausted")
        return left


def _decide(g: Graph, k: int, sigma: SigmaRhoSpec, rho: SigmaRhoSpec, clock: _Clock) -> SolveResult:
    res = exists_partition(g, k, sigma, rho, budget=clock.remaining())
    if res.status is Status.TIMEOUT:
        raise TimedOut(f"({k}, {sigma}, {rho})-partition search exceeded budget")
    return res


def _max_level(g, sigma, rho, upper, clock) -> int | None:
    # maximum problems are downward closed in k: ascend until the first No
    if not _decide(g, 1, sigma, rho, clock).yes:
        return None
    k = 1
    while k < upper and _decide(g, k + 1, sigma, rho, clock).yes:
        k += 1
    return k


def _min_level(g, sigma, rho, start, upper, clock) -> int | None:
    for k in range(max(start, 1), upper + 1):
        if _decide(g, k, sigma, rho, clock).yes:
            return k
    return None


def domatic_number(g: Graph, budget: float | None = None) -> int:
    """Maximum number of disjoint dominating sets partitioning ``g``."""
    if g.n == 0:
        raise EmptyGraph("domatic number of the empty graph")
    min_deg, _ = degree_stats(g)
    return _max_level(g, NATURALS, POSITIVE, min_deg + 1, _Clock(budget))


def gamma(g: Graph, budget: float | None = None) -> int | None:
    """Maximum k with a (k, N+, N+)-partition; None if even k=1 fails."""
    if g.n == 0:
        raise EmptyGraph("gamma of the empty graph")
    min_deg, _ = degree_stats(g)
    return _max_level(g, POSITIVE, POSITIVE, max(min_deg, 1), _Clock(budget))


def alpha(g: Graph, budget: float | None = None) -> int:
    """Minimum k with a (k, {0,1}, N)-partition."""
    return _min_level(g, ZERO_ONE, NATURALS, 1, max(g.n, 1), _Clock(budget))


def beta(g: Graph, budget: float | None = None) -> int | None:
    """Minimum k with a (k, {1}, N)-partition, or None when no k <= n works."""
    return _min_level(g, ONE, NATURALS, 1, max(g.n, 1), _Clock(budget))


def chromatic_number(g: Graph, budget: float | None = None) -> int:
    return _min_level(g, ZERO, NATURALS, 1, max(g.n, 1), _Clock(budget))


def exact_partition_decision(
    g: Graph, k: int, sigma: SigmaRhoSpec, rho: SigmaRhoSpec, budget: float | None = None
) -> bool:
    """In level k but not k-1 (minimum problems) or not k+1 (maximum problems)."""
    kind = classify(sigma, rho)
    if kind is None:
        raise NotMonotone(f"({sigma}, {rho}) is neither a minimum nor a maximum problem")
    if kind == "min" and k < 2:
        raise ValueError("exact minimum problems need k >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    clock = _Clock(budget)
    if not _decide(g, k, sigma, rho, clock).yes:
        return False
    other = k - 1 if kind == "min" else k + 1
    return not _decide(g, other, sigma, rho, clock).yes


def exact_domatic_in_set(g: Graph, m: ExactSet | Iterable[int], budget: float | None = None) -> bool:
    ms = m if isinstance(m, ExactSet) else ExactSet.of(m)
    if ms.values[0] < 1:
        raise ContiguousSet("domatic exact sets take positive members only")
    return domatic_number(g, budget) in ms


def dnp_odd(g: Graph, budget: float | None = None) -> bool:
    return domatic_number(g, budget) % 2 == 1


def dnp_equ(g: Graph, h: Graph, budget: float | None = None) -> bool:
    return domatic_number(g, budget) == domatic_number(h, budget)


def dnp_geq(g: Graph, h: Graph, budget: float | None = None) -> bool:
    return domatic_number(g, budget) >= domatic_number(h, budget)
