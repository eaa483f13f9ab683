"""Domatic numbers of gadget joins of Kaplan-Shamir images, with timings.

For each operand pair this prints the operand values, the join size, the
solved domatic number of the join and whether it equals the sum. With
``--lift`` it also validates the lifted partition built from operand
partitions, which certifies the lower bound without any search on the join.
"""
from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass

from domatic_lab.graph import complete_graph, cycle_graph, wheel_graph
from domatic_lab.quantities import domatic_number
from domatic_lab.reductions import gadget_join, kaplan_shamir
from domatic_lab.reductions.gadgets import lift_domatic_partition
from domatic_lab.sigma_rho import NATURALS, POSITIVE, check_partition
from domatic_lab.solver import exists_partition

BASES = {"K3": complete_graph(3), "K4": complete_graph(4), "C5": cycle_graph(5), "W5": wheel_graph(5)}


@dataclass
class Config:
    bases: tuple[str, ...] = ("K3", "K4")
    budget: float = 600.0
    lift: bool = False


def run(cfg: Config) -> bool:
    images = {name: kaplan_shamir(BASES[name]) for name in cfg.bases}
    deltas = {name: domatic_number(h.graph) for name, h in images.items()}
    all_ok = True
    print(f"{'pair':10s} {'n':>5s} {'d1':>3s} {'d2':>3s} {'join':>5s} {'sum?':>5s} {'secs':>7s}")
    for a, b in itertools.combinations_with_replacement(cfg.bases, 2):
        g = gadget_join(images[a], images[b])
        t0 = time.monotonic()
        d = domatic_number(g, cfg.budget)
        ok = d == deltas[a] + deltas[b]
        all_ok &= ok
        print(f"{a + ',' + b:10s} {g.n:5d} {deltas[a]:3d} {deltas[b]:3d} {d:5d} {str(ok):>5s} {time.monotonic() - t0:7.2f}")
        if cfg.lift:
            parts = [exists_partition(images[x].graph, deltas[x], NATURALS, POSITIVE).partition for x in (a, b)]
            lifted = lift_domatic_partition([images[a], images[b]], parts)
            print(f"{'':10s} lifted {lifted.k}-partition valid: {check_partition(g, lifted, NATURALS, POSITIVE)}")
    return all_ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bases", nargs="+", default=["K3", "K4"], choices=sorted(BASES))
    ap.add_argument("--budget", type=float, default=600.0)
    ap.add_argument("--lift", action="store_true")
    ns = ap.parse_args()
    return 0 if run(Config(tuple(ns.bases), ns.budget, ns.lift)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
