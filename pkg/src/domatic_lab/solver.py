"""Exact (k, sigma, rho)-partition search and its exhaustive oracle.

The backtracker keeps a bitmask domain of admissible classes per vertex and
propagates three rules to a fixpoint after every decision:

* interval filtering: for each vertex ``u`` and class ``c`` the final number of
  neighbors of ``u`` in ``c`` lies in ``[lo, hi]`` (fixed neighbors, fixed plus
  undecided supporters); a class is removed from ``u`` when the applicable
  set misses that interval;
* support forcing / capping: once ``u``'s relation to ``c`` is known, all
  supporters are forced into ``c`` when every one is needed, and removed from
  ``c`` when any one more would overshoot;
* hitting (all-different): when rho demands a neighbor in every foreign
  class, the closed (or open, if sigma also has a lower bound) neighborhood of
  ``u`` must meet all ``k`` classes; this is checked by bipartite matching and
  becomes an all-different restriction when the count is tight;
* clique capacity: when sigma is bounded by ``s``, a class holds at most
  ``s + 1`` vertices of any clique, so the undecided vertices of each maximal
  clique must fit into the leftover per-class room.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import TooLarge
from .graph import Graph, Partition
from .sigma_rho import SigmaRhoSpec

CHECK_EVERY = 16
BRUTE_LIMIT = 10**8


class Status(enum.Enum):
    YES = "YES"
    NO = "NO"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    partition: Partition | None = None
    nodes: int = 0

    @property
    def yes(self) -> bool:
        return self.status is Status.YES


class _Deadline(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _table(spec: SigmaRhoSpec, size: int) -> tuple[list[float], list[bool]]:
    nxt = [spec.next_member(i) for i in range(size + 2)]
    member = [i in spec for i in range(size + 2)]
    return nxt, member


class _Search:
    def __init__(self, g: Graph, k: int, sigma: SigmaRhoSpec, rho: SigmaRhoSpec, deadline: float | None):
        self.n = g.n
        self.k = k
        self.full = (1 << k) - 1
        self.nbrs = [tuple(sorted(a)) for a in g.adj]
        self.closed = [tuple(sorted(a | {v})) for v, a in enumerate(g.adj)]
        self.deg = [len(a) for a in g.adj]
        size = max(self.deg, default=0)
        self.s_next, self.s_mem = _table(sigma, size)
        self.r_next, self.r_mem = _table(rho, size)
        self.hitting = None
        if rho.min_member >= 1:
            self.hitting = self.nbrs if sigma.min_member >= 1 else self.closed
        self.cliques: list[tuple[int, ...]] = []
        if sigma.cofinite_from is None:
            self.room = int(sigma.max_member) + 1
            nxg = nx.Graph()
            nxg.add_nodes_from(range(g.n))
            nxg.add_edges_from(g.edges)
            self.cliques = [tuple(c) for c in nx.find_cliques(nxg) if len(c) > self.room]
        # clique ids per vertex, so only cliques around changed domains are rechecked
        self.cliques_of: list[list[int]] = [[] for _ in range(self.n)]
        for i, c in enumerate(self.cliques):
            for v in c:
                self.cliques_of[v].append(i)
        self.changed: set[int] = set()
        self.deadline = deadline
        self.nodes = 0
        # failure counts per constraint center, for dom/wdeg branching
        self.weight = [1] * self.n

    # -- propagation -------------------------------------------------------

    def _revise(self, u: int, d: list[int], queue: list[int]) -> bool:
        k = self.k
        lo = [0] * k
        hi = [0] * k
        for w in self.nbrs[u]:
            dw = d[w]
            if dw & (dw - 1) == 0:
                c = dw.bit_length() - 1
                lo[c] += 1
                hi[c] += 1
            else:
                for c in _bits(dw):
                    hi[c] += 1
        du = d[u]
        r_next, s_next = self.r_next, self.s_next
        rho_bad = [c for c in range(k) if r_next[lo[c]] > hi[c]]
        if len(rho_bad) > 1:
            return False
        new = du & (1 << rho_bad[0]) if rho_bad else du
        for a in _bits(new):
            if s_next[lo[a]] > hi[a]:
                new &= ~(1 << a)
        if new == 0:
            return False
        if new != du:
            d[u] = new
            self._touch(u, queue)
        single = new & (new - 1) == 0
        for c in range(k):
            bit = 1 << c
            if new & bit:
                if not single:
                    continue
                nxt, mem = s_next, self.s_mem
            else:
                nxt, mem = r_next, self.r_mem
            l, h = lo[c], hi[c]
            if l == h:
                continue
            if nxt[l] == h and h > l:
                # every undecided supporter is needed to reach the next member
                for w in self.nbrs[u]:
                    dw = d[w]
                    if dw & bit and dw != bit:
                        d[w] = bit
                        self._touch(w, queue)
            elif mem[l] and nxt[l + 1] > h:
                # count must stay at l; no supporter may join c
                for w in self.nbrs[u]:
                    dw = d[w]
                    if dw & bit and dw != bit:
                        dw &= ~bit
                        if dw == 0:
                            return False
                        d[w] = dw
                        self._touch(w, queue)
        if self.hitting is not None:
            return self._hit(u, d, queue)
        return True

    def _hit(self, u: int, d: list[int], queue: list[int]) -> bool:
        covered = 0
        free = []
        for w in self.hitting[u]:
            dw = d[w]
            if dw & (dw - 1) == 0:
                covered |= dw
            else:
                free.append(w)
        missing = self.full & ~covered
        if not missing:
            return True
        need = missing.bit_count()
        if need > len(free):
            return False
        if not _matchable(missing, [d[w] & missing for w in free]):
            return False
        if need == len(free):
            for w in free:
                dw = d[w]
                nd = dw & missing
                if nd != dw:
                    d[w] = nd
                    self._touch(w, queue)
        return True

    def _touch(self, w: int, queue: list[int]):
        self.changed.add(w)
        queue.append(w)
        queue.extend(self.nbrs[w])

    def _fits(self, clique: tuple[int, ...], d: list[int]) -> bool:
        k = self.k
        left = [self.room] * k
        free = []
        for v in clique:
            dv = d[v]
            if dv & (dv - 1):
                free.append(dv)
            else:
                c = dv.bit_length() - 1
                left[c] -= 1
                if left[c] < 0:
                    return False
        if not free:
            return True
        open_ = 0
        for c in range(k):
            if left[c] > 0:
                open_ |= 1 << c
        reach = 0
        for dv in free:
            reach |= dv & open_
        if sum(left[c] for c in _bits(reach)) < len(free):
            return False
        return _b_matchable([dv & open_ for dv in free], left)

    def _cliques_ok(self, d: list[int]) -> bool:
        ids = {i for v in self.changed for i in self.cliques_of[v]}
        for i in sorted(ids):
            clique = self.cliques[i]
            if not self._fits(clique, d):
                for v in clique:
                    self.weight[v] += 1
                return False
        return True

    def _propagate(self, d: list[int], queue: list[int]) -> bool:
        self.changed = set(queue)
        if not self._drain(d, queue):
            return False
        return not self.cliques or self._cliques_ok(d)

    def _drain(self, d: list[int], queue: list[int]) -> bool:
        pending = set(queue)
        queue[:] = list(pending)
        while queue:
            u = queue.pop()
            pending.discard(u)
            before = len(queue)
            if not self._revise(u, d, queue):
                self.weight[u] += 1
                return False
            # dedupe freshly queued work
            fresh = queue[before:]
            del queue[before:]
            for w in fresh:
                if w not in pending:
                    pending.add(w)
                    queue.append(w)
        return True

    # -- search ------------------------------------------------------------

    def run(self) -> tuple[Status, list[int] | None]:
        d = [self.full] * self.n
        if not self._propagate(d, list(range(self.n))):
            return Status.NO, None
        try:
            sol = self._dfs(d, 0)
        except _Deadline:
            return Status.TIMEOUT, None
        if sol is None:
            return Status.NO, None
        return Status.YES, [x.bit_length() - 1 for x in sol]

    def _dfs(self, d: list[int], decided: int) -> list[int] | None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % CHECK_EVERY == 0 and time.monotonic() > self.deadline:
            raise _Deadline
        best = -1
        best_key = None
        weight = self.weight
        for v in range(self.n):
            dv = d[v]
            if dv & (dv - 1):
                w = weight[v]
                for x in self.nbrs[v]:
                    w += weight[x]
                key = (dv.bit_count() / w, -self.deg[v])
                if best_key is None or key < best_key:
                    best, best_key = v, key
        if best < 0:
            return d
        dv = d[best]
        # classes never used in a decision are interchangeable: try only the lowest
        fresh = self.full & ~decided
        values = dv & decided
        spare = dv & fresh
        if spare:
            values |= spare & -spare
        for c in _bits(values):
            child = d.copy()
            child[best] = 1 << c
            if self._propagate(child, [best, *self.nbrs[best]]):
                sol = self._dfs(child, decided | (1 << c))
                if sol is not None:
                    return sol
        return None


def _matchable(missing: int, doms: list[int]) -> bool:
    """Can every class in ``missing`` be matched to a distinct vertex domain?"""
    owner: dict[int, int] = {}

    def augment(c: int, seen: set[int]) -> bool:
        for i, dom in enumerate(doms):
            if dom >> c & 1 and i not in seen:
                seen.add(i)
                if i not in owner or augment(owner[i], seen):
                    owner[i] = c
                    return True
        return False

    return all(augment(c, set()) for c in _bits(missing))


def _b_matchable(doms: list[int], cap: list[int]) -> bool:
    """Can each domain pick a class without exceeding per-class capacity?"""
    owners: list[list[int]] = [[] for _ in cap]

    def augment(i: int, seen: set[int]) -> bool:
        for c in _bits(doms[i]):
            if c in seen:
                continue
            seen.add(c)
            if len(owners[c]) < cap[c]:
                owners[c].append(i)
                return True
            for j, other in enumerate(owners[c]):
                if augment(other, seen):
                    owners[c][j] = i
                    return True
        return False

    return all(augment(i, set()) for i in range(len(doms)))


def exists_partition(
    g: Graph,
    k: int,
    sigma: SigmaRhoSpec,
    rho: SigmaRhoSpec,
    budget: float | None = None,
) -> SolveResult:
    """Decide whether ``g`` has a (k, sigma, rho)-partition.

    ``budget`` is a wall-clock limit in seconds; when exceeded the result is
    ``Status.TIMEOUT`` rather than an exception.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    deadline = None if budget is None else time.monotonic() + budget
    search = _Search(g, k, sigma, rho, deadline)
    status, classes = search.run()
    part = Partition(k, tuple(classes)) if classes is not None else None
    return SolveResult(status, part, search.nodes)


def brute_force_partition(
    g: Graph, k: int, sigma: SigmaRhoSpec, rho: SigmaRhoSpec, limit: int = BRUTE_LIMIT
) -> SolveResult:
    """Enumerate all ``k**n`` class assignments in vectorized chunks."""
    n = g.n
    total = k**n
    if total > limit:
        raise TooLarge(f"{k}^{n} = {total} assignments exceeds guard {limit}")
    if n == 0:
        return SolveResult(Status.YES, Partition(k, ()))
    adj = np.zeros((n, n), dtype=np.int32)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    in_sigma = np.array([c in sigma for c in range(n + 1)])
    in_rho = np.array([c in rho for c in range(n + 1)])
    powers = k ** np.arange(n, dtype=np.int64)
    chunk = 1 << 16
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        assign = (idx[:, None] // powers[None, :]) % k
        ok = np.ones(len(idx), dtype=bool)
        for c in range(k):
            member = assign == c
            counts = member.astype(np.int32) @ adj
            good = np.where(member, in_sigma[counts], in_rho[counts])
            ok &= good.all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            row = assign[hits[0]]
            return SolveResult(Status.YES, Partition(k, tuple(int(x) for x in row)), int(hits[0]) + start + 1)
    return SolveResult(Status.NO, None, total)
