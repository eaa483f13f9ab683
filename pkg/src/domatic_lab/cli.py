"""``domatic-lab``: solve, reduce, decide, verify and generate from the shell.

Exit codes: 0 success or YES, 1 NO (or a failed campaign), 2 error, 3 timeout.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any

from . import campaigns, quantities
from .cfsp import TaskMatrix, delta_min, delta_min_bruteforce, exact_cfsp, random_matrix
from .corpus import random_graph
from .errors import DomaticLabError, ParseError, TimedOut, TooLarge
from .exactset import ExactSet
from .graph import DecoratedGraph, Graph
from .io import graph_to_json, load_graph, partition_to_json, plain, write_dimacs
from .reductions import (
    gadget_join,
    ht_one_in_three,
    kaplan_shamir,
    multi_gadget_join,
    nae_construct,
    parity_pair,
    thm6_construct,
    times,
)
from .sat import MAX_VARS, Cnf3, TripleSystem, random_cnf3, random_triples
from .sigma_rho import NATURALS, ONE, POSITIVE, ZERO, ZERO_ONE, parse_spec
from .solver import BRUTE_LIMIT, Status, exists_partition

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2, 3

QUANTITIES = {
    "delta": (quantities.domatic_number, NATURALS, POSITIVE),
    "gamma": (quantities.gamma, POSITIVE, POSITIVE),
    "alpha": (quantities.alpha, ZERO_ONE, NATURALS),
    "beta": (quantities.beta, ONE, NATURALS),
    "chi": (quantities.chromatic_number, ZERO, NATURALS),
}


class UsageError(DomaticLabError):
    pass


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg}", exc.lineno) from None


def _emit(args, payload: dict[str, Any], text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _write_witness(path: str | None, data: dict[str, Any]):
    if path:
        Path(path).write_text(json.dumps(data, indent=2) + "\n")


def _decorated(path: str) -> DecoratedGraph:
    g = load_graph(path)
    if not isinstance(g, DecoratedGraph):
        raise UsageError(f"{path} carries no triangle decoration; produce it with 'reduce ks'")
    return g


def _require(args, *names: str):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} {args.kind} needs {', '.join(missing)}")


def _start(token: str | None) -> int | None:
    if token in (None, "free"):
        return None
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"--start expects 'free' or a machine index, got {token!r}") from None


# -- solve ---------------------------------------------------------------------


def cmd_solve(args) -> int:
    if args.kind == "cfsp":
        tm = TaskMatrix.from_json(_read_json(args.input))
        start = _start(args.start)
        if start is not None and not 0 <= start < tm.m:
            raise UsageError(f"start machine {start} outside 0..{tm.m - 1}")
        if args.oracle:
            value, sched = delta_min_bruteforce(tm, start), None
        else:
            value, sched = delta_min(tm, start)
        if sched is not None:
            _write_witness(args.witness, {"switches": value, "schedule": [list(t) for t in sched]})
        _emit(args, {"kind": "cfsp", "value": value}, str(value))
        return EXIT_OK
    g = plain(load_graph(args.input))
    if args.kind == "srp":
        _require(args, "k", "sigma", "rho")
        sigma, rho = parse_spec(args.sigma), parse_spec(args.rho)
        res = exists_partition(g, args.k, sigma, rho, budget=args.budget_seconds)
        if res.status is Status.TIMEOUT:
            raise TimedOut(f"search exceeded {args.budget_seconds} s")
        if res.yes:
            _write_witness(args.witness, partition_to_json(res.partition))
        _emit(args, {"kind": "srp", "answer": res.status.value, "nodes": res.nodes}, res.status.value)
        return EXIT_OK
    fn, sigma, rho = QUANTITIES[args.kind]
    value = fn(g, args.budget_seconds)
    if value is not None and args.witness:
        res = exists_partition(g, value, sigma, rho, budget=args.budget_seconds)
        if res.yes:
            _write_witness(args.witness, partition_to_json(res.partition))
    _emit(args, {"kind": args.kind, "value": value}, "none" if value is None else str(value))
    return EXIT_OK


# -- reduce --------------------------------------------------------------------


def _save(prefix: str, g: Graph | DecoratedGraph) -> list[str]:
    base = Path(prefix)
    base.parent.mkdir(parents=True, exist_ok=True)
    dimacs = base.with_name(base.name + ".dimacs")
    sidecar = base.with_name(base.name + ".json")
    dimacs.write_text(write_dimacs(plain(g)))
    sidecar.write_text(json.dumps(graph_to_json(g)) + "\n")
    return [str(dimacs), str(sidecar)]


def cmd_reduce(args) -> int:
    kind = args.kind
    outputs: dict[str, Graph | DecoratedGraph] = {}
    if kind == "ks":
        _require(args, "input")
        outputs[""] = kaplan_shamir(plain(load_graph(args.input)))
    elif kind in ("thm1", "times"):
        _require(args, "a", "b")
        h1, h2 = _decorated(args.a), _decorated(args.b)
        outputs[""] = gadget_join(h1, h2) if kind == "thm1" else times(h1, h2)
    elif kind in ("thm10", "parity"):
        if not args.inputs:
            raise UsageError(f"reduce {kind} needs --inputs with an even number of decorated graphs")
        hs = [_decorated(p) for p in args.inputs]
        if kind == "thm10":
            outputs[""] = multi_gadget_join(hs)
        else:
            outputs[".odd"], outputs[".even"] = parity_pair(hs)
    elif kind == "nae":
        _require(args, "f1", "f2")
        outputs[""] = nae_construct(Cnf3.from_json(_read_json(args.f1)), Cnf3.from_json(_read_json(args.f2)))
    elif kind == "ht13":
        _require(args, "input")
        outputs[""] = ht_one_in_three(TripleSystem.from_json(_read_json(args.input)))
    elif kind == "thm6":
        _require(args, "s1", "s2")
        outputs[""] = thm6_construct(
            TripleSystem.from_json(_read_json(args.s1)), TripleSystem.from_json(_read_json(args.s2))
        )
    files = []
    for suffix, g in outputs.items():
        files += _save(args.out + suffix, g)
    _emit(args, {"kind": kind, "files": files, "n": [plain(g).n for g in outputs.values()]}, "\n".join(files))
    return EXIT_OK


# -- decide --------------------------------------------------------------------


def cmd_decide(args) -> int:
    kind = args.kind
    budget = args.budget_seconds
    if kind == "exact-cfsp":
        _require(args, "set")
        tm = TaskMatrix.from_json(_read_json(args.input))
        answer = exact_cfsp(tm, ExactSet.parse(args.set), _start(args.start))
    else:
        g = plain(load_graph(args.input))
        if kind == "exact-domatic":
            _require(args, "set")
            answer = quantities.exact_domatic_in_set(g, ExactSet.parse(args.set), budget)
        elif kind == "dnp-odd":
            answer = quantities.dnp_odd(g, budget)
        elif kind in ("dnp-equ", "dnp-geq"):
            _require(args, "other")
            h = plain(load_graph(args.other))
            answer = (quantities.dnp_equ if kind == "dnp-equ" else quantities.dnp_geq)(g, h, budget)
        else:
            _require(args, "k", "sigma", "rho")
            answer = quantities.exact_partition_decision(
                g, args.k, parse_spec(args.sigma), parse_spec(args.rho), budget
            )
    word = "YES" if answer else "NO"
    _emit(args, {"kind": kind, "answer": word}, word)
    return EXIT_OK if answer else EXIT_NO


# -- verify --------------------------------------------------------------------


def cmd_verify(args) -> int:
    report = campaigns.run_campaign(args.campaign, args.seed, args.budget_seconds)
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_json(), indent=2, default=str) + "\n")
    if args.format == "json":
        print(json.dumps(report.to_json(), default=str))
    else:
        print(report.table())
    s = report.summary
    if s[campaigns.FAIL]:
        return EXIT_NO
    if s[campaigns.TIMEOUT]:
        return EXIT_TIMEOUT
    return EXIT_OK


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "graph":
        if args.oracle_safe and 4**args.n > BRUTE_LIMIT:
            raise TooLarge(f"n={args.n} is beyond the brute-force oracle at k=4")
        data = graph_to_json(random_graph(args.n, args.p, rng))
    elif args.kind == "cnf3":
        if args.oracle_safe and args.vars > MAX_VARS:
            raise TooLarge(f"{args.vars} variables exceeds the oracle limit {MAX_VARS}")
        data = random_cnf3(args.vars, args.clauses, rng).to_json()
    elif args.kind == "triples":
        if args.oracle_safe and args.vars > MAX_VARS:
            raise TooLarge(f"{args.vars} variables exceeds the oracle limit {MAX_VARS}")
        data = random_triples(args.vars, args.sets, rng).to_json()
    else:
        tm = random_matrix(args.n, args.m, args.density, rng)
        if args.oracle_safe and len(tm.tasks()) > 10:
            raise TooLarge(f"{len(tm.tasks())} tasks exceeds the enumeration guard")
        data = tm.to_json()
    text = json.dumps(data, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--budget-seconds", type=float, default=None, help="wall-clock limit")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="domatic-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="compute a quantity or decide one partition level")
    s.add_argument("kind", choices=(*QUANTITIES, "srp", "cfsp"))
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--sigma")
    s.add_argument("--rho")
    s.add_argument("--witness", help="write a witness partition or schedule here")
    s.add_argument("--oracle", action="store_true", help="cfsp: use exhaustive enumeration")
    s.add_argument("--start", default="free", help="cfsp: 'free' or a starting machine index")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("reduce", parents=[common], help="build a reduction graph")
    r.add_argument("kind", choices=("ks", "thm1", "thm10", "times", "parity", "nae", "ht13", "thm6"))
    r.add_argument("--in", dest="input")
    r.add_argument("--inputs", nargs="+")
    r.add_argument("--a")
    r.add_argument("--b")
    r.add_argument("--f1")
    r.add_argument("--f2")
    r.add_argument("--s1")
    r.add_argument("--s2")
    r.add_argument("--out", default="reduced", help="output prefix for .dimacs and .json")
    r.set_defaults(func=cmd_reduce)

    d = sub.add_parser("decide", parents=[common], help="exact-value decision problems")
    d.add_argument("kind", choices=("exact-domatic", "dnp-odd", "dnp-equ", "dnp-geq", "exact-cfsp", "exact-srp"))
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--other", help="second graph for dnp-equ / dnp-geq")
    d.add_argument("--set", help="comma-separated noncontiguous values, e.g. 9,11")
    d.add_argument("--k", type=int)
    d.add_argument("--sigma")
    d.add_argument("--rho")
    d.add_argument("--start", default="free")
    d.set_defaults(func=cmd_decide)

    v = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    v.add_argument("campaign", choices=tuple(campaigns.CAMPAIGNS))
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--report", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", parents=[common], help="seeded instance generators")
    g.add_argument("kind", choices=("graph", "cnf3", "triples", "matrix"))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--m", type=int, default=3)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--vars", type=int, default=4)
    g.add_argument("--clauses", type=int, default=3)
    g.add_argument("--sets", type=int, default=3)
    g.add_argument("--oracle-safe", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except TimedOut as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (DomaticLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
