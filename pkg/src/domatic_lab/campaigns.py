"""Verification campaigns: replay each combinatorial identity over a seeded corpus.

Every campaign returns a :class:`VerifyReport`; records carry an input
digest, the relation being checked, what was observed, and one of
``ok``/``fail``/``timeout``.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable

from . import corpus
from .cfsp import (
    TaskMatrix,
    block_diagonal,
    composition_offset,
    delta_min,
    delta_min_bruteforce,
    is_valid_schedule,
    sk_from_z,
    switch_count,
)
from .coloring import chromatic_number_classic
from .errors import TimedOut
from .graph import Graph, complete_graph, degree_stats, has_isolated_vertex, join
from .io import graph_to_json
from .quantities import alpha, beta, chromatic_number, domatic_number, gamma
from .reductions import (
    beta_equals_alpha_check,
    exact_mk_set,
    gadget_join,
    ht_one_in_three,
    kaplan_shamir,
    multi_gadget_join,
    nae_construct,
    parity_pair,
    thm6_construct,
)
from .reductions.gadgets import gadget_vertices, lift_domatic_partition
from .sat import nae3_decide, one_in_three_decide
from .sigma_rho import MENU, NATURALS, POSITIVE, check_partition, classify
from .solver import Status, brute_force_partition, exists_partition

DEFAULT_BUDGET = 60.0
OK, FAIL, TIMEOUT = "ok", "fail", "timeout"


@dataclass
class Record:
    instance: str
    digest: str
    expected: str
    observed: Any
    status: str
    seconds: float = 0.0


@dataclass
class VerifyReport:
    campaign: str
    seed: int
    budget: float
    records: list[Record] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {OK: 0, FAIL: 0, TIMEOUT: 0}
        for r in self.records:
            counts[r.status] += 1
        return counts

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(r.status == OK for r in self.records)

    def to_json(self) -> dict[str, Any]:
        return {
            "campaign": self.campaign,
            "seed": self.seed,
            "budget": self.budget,
            "summary": self.summary,
            "records": [asdict(r) for r in self.records],
        }

    def table(self) -> str:
        rows = [("instance", "digest", "expected", "observed", "status", "s")]
        for r in self.records:
            rows.append((r.instance, r.digest, r.expected, str(r.observed), r.status, f"{r.seconds:.2f}"))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows]
        s = self.summary
        lines.append(f"{self.campaign}: {s[OK]} ok, {s[FAIL]} fail, {s[TIMEOUT]} timeout")
        return "\n".join(lines)


def digest(obj: Any) -> str:
    if isinstance(obj, Graph):
        obj = graph_to_json(obj)
    elif hasattr(obj, "to_json"):
        obj = obj.to_json()
    blob = json.dumps(obj, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("DOMATIC_LAB_THREADS", "1")))
    except ValueError:
        return 1


Check = Callable[[], tuple[Any, bool]]


def _run(name: str, seed: int, budget: float, items: Iterable[tuple[str, Any, str, Check]]) -> VerifyReport:
    """Evaluate ``(label, payload, expected, check)`` items, optionally in threads."""
    items = list(items)

    def one(item) -> Record:
        label, payload, expected, check = item
        t0 = time.monotonic()
        try:
            observed, good = check()
            status = OK if good else FAIL
        except TimedOut as exc:
            observed, status = f"timeout: {exc}", TIMEOUT
        return Record(label, digest(payload), expected, observed, status, time.monotonic() - t0)

    workers = thread_count()
    if workers == 1:
        records = [one(it) for it in items]
    else:
        with ThreadPoolExecutor(workers) as pool:
            records = list(pool.map(one, items))
    return VerifyReport(name, seed, budget, records)


# -- graph campaigns -------------------------------------------------------


def lemma3(seed: int = 1, budget: float = DEFAULT_BUDGET) -> VerifyReport:
    def item(label, g):
        def check():
            chi = chromatic_number_classic(g)
            d = domatic_number(kaplan_shamir(g).graph, budget)
            good = (chi == 3) == (d == 3) and (chi < 4 or d == 2)
            return {"chi": chi, "delta_ks": d}, good

        return label, g, "chi=3 <=> delta(ks)=3; chi>=4 => delta(ks)=2", check

    return _run("lemma3", seed, budget, (item(label, g) for label, g in corpus.lemma3_graphs(seed)))


def _thm1_item(name_a: str, a: Graph, name_b: str, b: Graph, budget: float):
    ha, hb = kaplan_shamir(a), kaplan_shamir(b)

    def check():
        da = domatic_number(ha.graph, budget)
        db = domatic_number(hb.graph, budget)
        g = gadget_join(ha, hb)
        target = da + db
        try:
            d = domatic_number(g, budget)
            return {"delta": d, "n": g.n}, d == target
        except TimedOut:
            pass
        # constructive lower bound plus refutation one level up
        pa = exists_partition(ha.graph, da, NATURALS, POSITIVE).partition
        pb = exists_partition(hb.graph, db, NATURALS, POSITIVE).partition
        lifted = lift_domatic_partition([ha, hb], [pa, pb])
        lower = check_partition(g, lifted, NATURALS, POSITIVE)
        up = exists_partition(g, target + 1, NATURALS, POSITIVE, budget=budget)
        if up.status is Status.TIMEOUT:
            raise TimedOut("refutation above the target timed out")
        return {"lower_bound_ok": lower, "refuted_above": up.status is Status.NO}, lower and up.status is Status.NO

    return f"ks({name_a}) x ks({name_b})", (a, b), "delta = delta(H1) + delta(H2)", check


def thm1(seed: int = 1, budget: float = 600.0) -> VerifyReport:
    k3, k4 = complete_graph(3), complete_graph(4)
    pairs = [("K3", k3, "K3", k3), ("K3", k3, "K4", k4), ("K4", k4, "K4", k4)]
    return _run("thm1", seed, budget, (_thm1_item(*p, budget) for p in pairs))


def thm3(seed: int = 1, budget: float = DEFAULT_BUDGET, count: int = 21) -> VerifyReport:
    pairs = [corpus.reference_nae_pair(), *corpus.nae_pairs(seed, count)]

    def item(i, f1, f2):
        s1, s2 = nae3_decide(f1).sat, nae3_decide(f2).sat
        want = 2 + s1 + s2

        def check():
            g = nae_construct(f1, f2)
            got = gamma(g, budget)
            return {"gamma": got, "n": g.n}, got == want

        label = "reference" if i == 0 else f"pair{i}"
        return label, {"f1": f1.to_json(), "f2": f2.to_json()}, f"gamma={want} (nae {int(s1)}{int(s2)})", check

    return _run("thm3", seed, budget, (item(i, *p) for i, p in enumerate(pairs)))


def thm6_systems() -> tuple[Any, Any]:
    """Smallest satisfiable and unsatisfiable systems used for the join cases."""
    return corpus.single_triple(), corpus.repeated_triple()


def thm6(seed: int = 1, budget: float = 900.0, per_class: int = 10) -> VerifyReport:
    systems = corpus.triple_systems(seed, per_class)
    items = []
    for sat, group in systems.items():
        for i, s in enumerate(group):
            def check(s=s, sat=sat):
                a = alpha(ht_one_in_three(s), budget)
                return {"alpha": a}, a == (2 if sat else 3)

            items.append((f"{'sat' if sat else 'unsat'}{i}", s, f"alpha={2 if sat else 3}", check))
    yes, no = thm6_systems()
    for name, s1, s2 in (("join(sat,sat)", yes, yes), ("join(sat,unsat)", yes, no), ("join(unsat,unsat)", no, no)):
        def check(s1=s1, s2=s2):
            a1 = alpha(ht_one_in_three(s1), budget)
            a2 = alpha(ht_one_in_three(s2), budget)
            g = thm6_construct(s1, s2)
            a = alpha(g, budget)
            return {"alpha": a, "parts": [a1, a2], "n": g.n}, a == a1 + a2

        items.append((name, {"s1": s1.to_json(), "s2": s2.to_json()}, "alpha = alpha(G1) + alpha(G2)", check))
    return _run("thm6", seed, budget, items)


def thm8(seed: int = 1, budget: float = DEFAULT_BUDGET, per_class: int = 10) -> VerifyReport:
    systems = corpus.triple_systems(seed, per_class)
    extra = [corpus.reference_triple_system(), corpus.all_triples_on_four()]
    pool = [s for group in systems.values() for s in group] + extra

    def item(i, s):
        def check():
            g = ht_one_in_three(s)
            a, b = alpha(g, budget), beta(g, budget)
            return {"alpha": a, "beta": b}, a == b and beta_equals_alpha_check(g, s, budget)

        return f"system{i}", s, "beta = alpha", check

    return _run("thm8", seed, budget, (item(i, s) for i, s in enumerate(pool)))


def thm10_k1(seed: int = 1, budget: float = DEFAULT_BUDGET) -> VerifyReport:
    k3, k4 = kaplan_shamir(complete_graph(3)), kaplan_shamir(complete_graph(4))
    items = []
    for name, pair in (("K3,K3", [k3, k3]), ("K3,K4", [k3, k4]), ("K4,K4", [k4, k4])):
        def same(pair=pair):
            return {"identical": True}, multi_gadget_join(pair) == gadget_join(*pair)

        items.append((f"k=1 {name}", [graph_to_json(h) for h in pair], "multi_gadget_join = gadget_join", same))

    four = [k3] * 4

    def degrees():
        g = multi_gadget_join(four)
        degs = {g.degree(v) for block in gadget_vertices(four) for v in block}
        return {"gadget_degrees": sorted(degs)}, degs == {11}

    items.append(("k=2 4xK3", [graph_to_json(h) for h in four], "gadget degree = 11", degrees))
    for k, want in ((1, (5,)), (2, (9, 11)), (3, (13, 15, 17))):
        def mk(k=k, want=want):
            got = exact_mk_set(k).values
            return list(got), got == want

        items.append((f"M_{k}", k, f"M_k = {list(want)}", mk))
    return _run("thm10-k1", seed, budget, items)


def parity_k1(seed: int = 1, budget: float = 600.0) -> VerifyReport:
    k3, k4 = kaplan_shamir(complete_graph(3)), kaplan_shamir(complete_graph(4))
    cases = [("K3,K4", [k3, k4], 1), ("K3,K3", [k3, k3], 0), ("K4,K4", [k4, k4], 0), ("K4,K3", [k4, k3], -1)]

    def item(name, hs, gap):
        def check():
            odd, even = parity_pair(hs)
            do, de = domatic_number(odd.graph, budget), domatic_number(even.graph, budget)
            return {"delta_odd": do, "delta_even": de}, do - de == gap

        return name, [graph_to_json(h) for h in hs], f"delta(G_odd) - delta(G_even) = {gap}", check

    return _run("parity-k1", seed, budget, (item(*c) for c in cases))


def fact1(seed: int = 1, budget: float = DEFAULT_BUDGET, count: int = 500, max_k: int = 4) -> VerifyReport:
    """Minimum problems are upward closed in k, maximum problems downward closed."""
    pairs = [(s, r) for s in MENU.values() for r in MENU.values() if classify(s, r) is not None]

    def item(i, g):
        def check():
            bad = []
            for sigma, rho in pairs:
                kind = classify(sigma, rho)
                levels = [exists_partition(g, k, sigma, rho).yes for k in range(1, max_k + 1)]
                for k in range(max_k - 1):
                    lo, hi = levels[k], levels[k + 1]
                    if (kind == "min" and lo and not hi) or (kind == "max" and hi and not lo):
                        bad.append(f"{sigma.name}/{rho.name}@{k + 1}")
            return bad or "monotone", not bad

        return f"graph{i}", g, "monotone in k", check

    return _run("fact1", seed, budget, (item(i, g) for i, g in enumerate(corpus.small_graphs(seed, count))))


def oracle_srp(seed: int = 1, budget: float = DEFAULT_BUDGET, count: int = 500, max_k: int = 4) -> VerifyReport:
    pairs = [(s, r) for s in MENU.values() for r in MENU.values()]

    def item(i, g):
        def check():
            mismatches = []
            for k in range(1, max_k + 1):
                for sigma, rho in pairs:
                    fast = exists_partition(g, k, sigma, rho)
                    slow = brute_force_partition(g, k, sigma, rho)
                    witness_ok = not fast.yes or check_partition(g, fast.partition, sigma, rho)
                    if fast.yes != slow.yes or not witness_ok:
                        mismatches.append(f"k={k} {sigma.name}/{rho.name}")
            return mismatches or "agree", not mismatches

        return f"graph{i}", g, "solver = brute force", check

    return _run("oracle-srp", seed, budget, (item(i, g) for i, g in enumerate(corpus.small_graphs(seed, count))))


def structural(seed: int = 1, budget: float = DEFAULT_BUDGET, count: int = 500, pairs: int = 50) -> VerifyReport:
    """delta <= min_deg + 1, delta = 1 iff an isolated vertex, chi additive under join."""
    items = []
    for i, g in enumerate(corpus.small_graphs(seed, count)):
        def check(g=g):
            d = domatic_number(g, budget)
            min_deg, _ = degree_stats(g)
            good = d <= min_deg + 1 and (d == 1) == has_isolated_vertex(g)
            return {"delta": d, "min_deg": min_deg}, good

        items.append((f"graph{i}", g, "delta <= min_deg+1; delta=1 iff isolated", check))
    for i, jp in enumerate(corpus.join_pairs(seed, pairs)):
        def check(jp=jp):
            ca, cb = chromatic_number(jp.a, budget), chromatic_number(jp.b, budget)
            cj = chromatic_number(join(jp.a, jp.b), budget)
            return {"chi_a": ca, "chi_b": cb, "chi_join": cj}, cj == ca + cb

        items.append((f"join{i}", {"a": graph_to_json(jp.a), "b": graph_to_json(jp.b)}, "chi(A+B) = chi(A)+chi(B)", check))
    return _run("structural", seed, budget, items)


# -- scheduling campaigns --------------------------------------------------


def oracle_cfsp(seed: int = 1, budget: float = DEFAULT_BUDGET, random_count: int = 100) -> VerifyReport:
    mats = corpus.all_matrices(3, 3) + corpus.random_matrices(seed, random_count, 4, 4, 10)

    def item(i, tm: TaskMatrix):
        def check():
            best, sched = delta_min(tm)
            oracle = delta_min_bruteforce(tm)
            good = best == oracle and is_valid_schedule(tm, sched) and switch_count(sched) == best
            return {"delta_min": best, "oracle": oracle}, good

        return f"{tm.n}x{tm.m}#{i}", tm, "delta_min = brute force; witness valid", check

    return _run("oracle-cfsp", seed, budget, (item(i, tm) for i, tm in enumerate(mats)))


def cfsp_compose(seed: int = 1, budget: float = DEFAULT_BUDGET, max_blocks: int = 3) -> VerifyReport:
    universe = corpus.small_matrix_universe(2, 2)
    items = []
    # one record per list length keeps reports short
    for length in range(1, max_blocks + 1):
        def check(length=length):
            bad = 0
            total = 0
            for blocks in itertools.product(universe, repeat=length):
                nonempty = sum(1 for b in blocks if b.tasks())
                want = max(nonempty - 1, 0)
                total += 1
                if composition_offset(blocks, budget) != want:
                    bad += 1
            return {"lists": total, "mismatches": bad}, bad == 0

        items.append((f"{length} block(s)", {"length": length}, "offset = nonempty blocks - 1", check))
    for z, k in ((0, 1), (4, 2), (10, 3)):
        def sk(z=z, k=k):
            got = sk_from_z(z, k).values
            want = tuple(range(z + 1, z + 2 * k, 2))
            return list(got), got == want

        items.append((f"S_k z={z} k={k}", {"z": z, "k": k}, "S_k = {z+1, ..., z+2k-1}", sk))
    return _run("cfsp-compose", seed, budget, items)


CAMPAIGNS: dict[str, Callable[..., VerifyReport]] = {
    "lemma3": lemma3,
    "thm1": thm1,
    "thm3": thm3,
    "thm6": thm6,
    "thm8": thm8,
    "thm10-k1": thm10_k1,
    "parity-k1": parity_k1,
    "fact1": fact1,
    "oracle-srp": oracle_srp,
    "oracle-cfsp": oracle_cfsp,
    "cfsp-compose": cfsp_compose,
    "structural": structural,
}


def run_campaign(name: str, seed: int = 1, budget: float | None = None) -> VerifyReport:
    fn = CAMPAIGNS[name]
    return fn(seed) if budget is None else fn(seed, budget)
