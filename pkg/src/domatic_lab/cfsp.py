"""Conveyor flow shop: one worker, unit machine distances, fixed job and machine orders.

A task ``(j, p)`` may run once every earlier task of job ``j`` (lower machine
index) and every earlier task on machine ``p`` (lower job index) is done.
``delta_min`` is a 0-1 BFS over states ``(progress per machine, worker
position)``; ``delta_min_bruteforce`` enumerates every linear extension.
"""
from __future__ import annotations

import math
import random
import time
from collections import deque
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import ParseError, TimedOut, TooLarge
from .exactset import ExactSet

STATE_LIMIT = 10**8
BRUTE_TASKS = 10

Task = tuple[int, int]


@dataclass(frozen=True)
class TaskMatrix:
    """``cells[j][p] == 1`` iff job ``j`` must be processed on machine ``p``."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.cells)
        if not rows or not rows[0]:
            raise ParseError("task matrix needs at least one job and one machine")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ParseError("task matrix rows differ in length")
            if any(x not in (0, 1) for x in r):
                raise ParseError("task matrix entries must be 0 or 1")
        object.__setattr__(self, "cells", rows)

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def m(self) -> int:
        return len(self.cells[0])

    def tasks(self) -> list[Task]:
        return [(j, p) for j in range(self.n) for p in range(self.m) if self.cells[j][p]]

    def column(self, p: int) -> list[int]:
        return [j for j in range(self.n) if self.cells[j][p]]

    @classmethod
    def from_rows(cls, rows: Sequence[str | Sequence[int]]) -> "TaskMatrix":
        return cls(tuple(tuple(int(ch) for ch in r) for r in rows))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "m": self.m, "rows": ["".join(map(str, r)) for r in self.cells]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "TaskMatrix":
        try:
            tm = cls.from_rows(data["rows"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed task matrix JSON: {exc}") from None
        if tm.n != data.get("n", tm.n) or tm.m != data.get("m", tm.m):
            raise ParseError("declared dimensions disagree with rows")
        return tm


def zeros(n: int, m: int) -> TaskMatrix:
    return TaskMatrix(tuple((0,) * m for _ in range(n)))


def is_valid_schedule(tm: TaskMatrix, schedule: Sequence[Task]) -> bool:
    tasks = [tuple(t) for t in schedule]
    if sorted(tasks) != tm.tasks():
        return False
    last_machine: dict[int, int] = {}
    last_job: dict[int, int] = {}
    for j, p in tasks:
        if last_machine.get(j, -1) >= p or last_job.get(p, -1) >= j:
            return False
        last_machine[j] = p
        last_job[p] = j
    return True


def switch_count(schedule: Sequence[Task]) -> int:
    return sum(1 for a, b in zip(schedule, schedule[1:]) if a[1] != b[1])


def _cost(start: int | None, schedule: Sequence[Task]) -> int:
    extra = 1 if schedule and start is not None and schedule[0][1] != start else 0
    return switch_count(schedule) + extra


def delta_min(tm: TaskMatrix, start: int | None = None) -> tuple[int, list[Task]]:
    """Minimum machine switches and a schedule achieving it.

    ``start=None`` lets the worker begin anywhere for free; an integer pins
    the starting machine, and moving away from it costs one switch.
    """
    cols = [tm.column(p) for p in range(tm.m)]
    states = math.prod(len(c) + 1 for c in cols) * (tm.m + 1)
    if states > STATE_LIMIT:
        raise TooLarge(f"{states} states exceeds guard {STATE_LIMIT}")
    # rank of job j on machine p, and the machines each job visits
    rank = [{j: i for i, j in enumerate(c)} for c in cols]
    visits = [[p for p in range(tm.m) if tm.cells[j][p]] for j in range(tm.n)]
    prev_machine = {}
    for j, ps in enumerate(visits):
        for a, b in zip([None, *ps], ps):
            prev_machine[(j, b)] = a
    total = len(tm.tasks())
    origin = (tuple(0 for _ in cols), start)
    dist = {origin: 0}
    parent: dict = {origin: None}
    dq = deque([origin])
    goal = None
    while dq:
        state = dq.popleft()
        prog, pos = state
        base = dist[state]
        if sum(prog) == total:
            goal = state
            break
        for p, col in enumerate(cols):
            i = prog[p]
            if i == len(col):
                continue
            j = col[i]
            q = prev_machine[(j, p)]
            if q is not None and prog[q] <= rank[q][j]:
                continue
            step = 0 if pos is None or pos == p else 1
            nxt = (prog[:p] + (i + 1,) + prog[p + 1:], p)
            nd = base + step
            if nd < dist.get(nxt, math.inf):
                dist[nxt] = nd
                parent[nxt] = (state, (j, p))
                if step:
                    dq.append(nxt)
                else:
                    dq.appendleft(nxt)
    assert goal is not None
    schedule = []
    cur = goal
    while parent[cur] is not None:
        cur, task = parent[cur]
        schedule.append(task)
    schedule.reverse()
    return dist[goal], schedule


def delta_min_bruteforce(tm: TaskMatrix, start: int | None = None, limit: int = BRUTE_TASKS) -> int:
    """Minimum over every valid schedule, enumerated one linear extension at a time."""
    tasks = tm.tasks()
    if len(tasks) > limit:
        raise TooLarge(f"{len(tasks)} tasks exceeds the {limit}-task enumeration guard")
    preds = {
        t: [s for s in tasks if s != t and ((s[0] == t[0] and s[1] < t[1]) or (s[1] == t[1] and s[0] < t[0]))]
        for t in tasks
    }
    best = math.inf
    order: list[Task] = []
    done: set[Task] = set()

    def extend():
        nonlocal best
        if len(order) == len(tasks):
            best = min(best, _cost(start, order))
            return
        for t in tasks:
            if t not in done and all(s in done for s in preds[t]):
                done.add(t)
                order.append(t)
                extend()
                order.pop()
                done.discard(t)

    extend()
    return int(best)


def block_diagonal(blocks: Sequence[TaskMatrix]) -> TaskMatrix:
    if not blocks:
        raise ValueError("need at least one block")
    width = sum(b.m for b in blocks)
    rows = []
    left = 0
    for b in blocks:
        for r in b.cells:
            rows.append((0,) * left + r + (0,) * (width - left - b.m))
        left += b.m
    return TaskMatrix(tuple(rows))


def composition_offset(blocks: Sequence[TaskMatrix], budget: float | None = None) -> int:
    """Switches of the composed matrix minus the sum over blocks."""
    deadline = None if budget is None else time.monotonic() + budget
    parts = 0
    for b in blocks:
        parts += delta_min(b)[0]
        if deadline is not None and time.monotonic() > deadline:
            raise TimedOut("composition offset exceeded budget")
    whole = delta_min(block_diagonal(blocks))[0]
    if deadline is not None and time.monotonic() > deadline:
        raise TimedOut("composition offset exceeded budget")
    return whole - parts


def exact_cfsp(tm: TaskMatrix, s: ExactSet | Sequence[int], start: int | None = None) -> bool:
    es = s if isinstance(s, ExactSet) else ExactSet.of(s)
    return delta_min(tm, start)[0] in es


def sk_from_z(z: int, k: int, offset: int = 0) -> ExactSet:
    """``{z+offset+1, z+offset+3, ..., z+offset+2k-1}`` for even ``z``."""
    from .errors import OddZ

    if z % 2:
        raise OddZ(f"z must be even, got {z}")
    if k < 1:
        raise ValueError("k must be >= 1")
    return ExactSet(tuple(z + offset + 2 * i - 1 for i in range(1, k + 1)))


def random_matrix(n: int, m: int, density: float, rng: random.Random) -> TaskMatrix:
    return TaskMatrix(tuple(tuple(int(rng.random() < density) for _ in range(m)) for _ in range(n)))
