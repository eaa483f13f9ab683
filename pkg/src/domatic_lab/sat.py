"""3-CNF formulas, triple systems and exhaustive satisfiability oracles.

Literals are ``Lit(var, neg)`` with 0-based variables.  JSON uses the usual
signed 1-based integers.  Clauses and triples are ordered 3-tuples that may
repeat a literal; one-in-three counting is multiplicity-aware, so ``{x, x, y}``
with ``x`` true counts two hits.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, NamedTuple

from .errors import NegativeLiteral, PadFailure, ParseError, TooLarge

log = logging.getLogger(__name__)

MAX_VARS = 24


class Lit(NamedTuple):
    var: int
    neg: bool = False

    def __invert__(self) -> "Lit":
        return Lit(self.var, not self.neg)

    def value(self, assignment) -> bool:
        return bool(assignment[self.var]) != self.neg

    def to_int(self) -> int:
        return -(self.var + 1) if self.neg else self.var + 1

    @classmethod
    def from_int(cls, x: int) -> "Lit":
        if x == 0:
            raise ParseError("literal 0 is not allowed")
        return cls(abs(x) - 1, x < 0)


Clause = tuple[Lit, Lit, Lit]


def _clauses(raw: Iterable[Iterable[Lit | int]]) -> tuple[Clause, ...]:
    out = []
    for c in raw:
        lits = tuple(x if isinstance(x, Lit) else Lit.from_int(x) for x in c)
        if len(lits) != 3:
            raise ParseError(f"clause {c} does not have exactly three literals")
        out.append(lits)
    return tuple(out)


@dataclass(frozen=True)
class Cnf3:
    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", _clauses(self.clauses))
        for c in self.clauses:
            for lit in c:
                if not 0 <= lit.var < self.num_vars:
                    raise ParseError(f"literal {lit.to_int()} outside {self.num_vars} variables")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def variables_used(self) -> set[int]:
        return {lit.var for c in self.clauses for lit in c}

    def to_json(self) -> dict[str, Any]:
        return {"num_vars": self.num_vars, "clauses": [[l.to_int() for l in c] for c in self.clauses]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Cnf3":
        try:
            return cls(int(data["num_vars"]), tuple(tuple(c) for c in data["clauses"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed CNF JSON: {exc}") from None


@dataclass(frozen=True)
class TripleSystem:
    num_vars: int
    sets: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", _clauses(self.sets))
        for s in self.sets:
            for lit in s:
                if not 0 <= lit.var < self.num_vars:
                    raise ParseError(f"literal {lit.to_int()} outside {self.num_vars} variables")

    @property
    def m(self) -> int:
        return len(self.sets)

    def is_positive(self) -> bool:
        return all(not lit.neg for s in self.sets for lit in s)

    def require_positive(self):
        if not self.is_positive():
            raise NegativeLiteral("construction needs a triple system with positive literals only")

    def literals(self) -> list[Lit]:
        """Distinct literals in first-occurrence order."""
        seen: dict[Lit, None] = {}
        for s in self.sets:
            for lit in s:
                seen.setdefault(lit)
        return list(seen)

    def to_json(self) -> dict[str, Any]:
        return {"num_vars": self.num_vars, "sets": [[l.to_int() for l in s] for s in self.sets]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "TripleSystem":
        try:
            return cls(int(data["num_vars"]), tuple(tuple(s) for s in data["sets"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed triple-system JSON: {exc}") from None


@dataclass(frozen=True)
class SatResult:
    sat: bool
    assignment: tuple[bool, ...] | None = None

    def __bool__(self):
        return self.sat


def assignments(num_vars: int) -> Iterator[tuple[bool, ...]]:
    if num_vars > MAX_VARS:
        raise TooLarge(f"{num_vars} variables exceeds the {MAX_VARS}-variable enumeration guard")
    return itertools.product((False, True), repeat=num_vars)


def clause_satisfied(c: Clause, t) -> bool:
    return any(lit.value(t) for lit in c)


def clause_nae(c: Clause, t) -> bool:
    vals = {lit.value(t) for lit in c}
    return len(vals) == 2


def sat3_decide(f: Cnf3) -> SatResult:
    for t in assignments(f.num_vars):
        if all(clause_satisfied(c, t) for c in f.clauses):
            return SatResult(True, t)
    return SatResult(False)


def nae3_decide(f: Cnf3) -> SatResult:
    """Some assignment gives every clause a true and a false literal."""
    for t in assignments(f.num_vars):
        if all(clause_nae(c, t) for c in f.clauses):
            return SatResult(True, t)
    return SatResult(False)


def one_in_three_hits(s: Clause, t) -> int:
    return sum(lit.value(t) for lit in s)


@dataclass(frozen=True)
class OneInThreeResult:
    sat: bool
    true_literals: frozenset[Lit] | None = None
    assignment: tuple[bool, ...] | None = None

    def __bool__(self):
        return self.sat


def one_in_three_decide(s: TripleSystem) -> OneInThreeResult:
    for t in assignments(s.num_vars):
        if all(one_in_three_hits(x, t) == 1 for x in s.sets):
            true_lits = frozenset(
                Lit(v, not t[v]) for v in range(s.num_vars)
            )
            return OneInThreeResult(True, true_lits, t)
    return OneInThreeResult(False)


def nae_closure(f: Cnf3) -> Cnf3:
    """Append the literal-wise negation of every clause."""
    negated = tuple(tuple(~lit for lit in c) for c in f.clauses)
    return Cnf3(f.num_vars, f.clauses + negated)


def max_sat_stats(f: Cnf3) -> tuple[int, int]:
    """(most clauses satisfiable at once, fewest left unsatisfied)."""
    best = 0
    for t in assignments(f.num_vars):
        best = max(best, sum(clause_satisfied(c, t) for c in f.clauses))
        if best == f.m:
            break
    return best, f.m - best


def pad_for_nae(f: Cnf3, min_vars: int = 2) -> tuple[Cnf3, list[str]]:
    """Make ``f`` have >= ``min_vars`` variables, each occurring in some clause.

    Missing variables ``x`` get the clause ``(x | y | ~y)``, which every
    assignment satisfies in the not-all-equal sense.  Returns the padded
    formula and a log of the changes; NAE satisfiability is re-checked with
    the oracle.
    """
    notes = []
    num_vars = f.num_vars
    if num_vars < min_vars:
        notes.append(f"added {min_vars - num_vars} variable(s)")
        num_vars = min_vars
    used = f.variables_used()
    extra = []
    for x in range(num_vars):
        if x in used:
            continue
        y = 1 if x == 0 else 0
        extra.append((Lit(x), Lit(y), Lit(y, True)))
        notes.append(f"variable {x + 1} unused: appended ({x + 1} | {y + 1} | -{y + 1})")
    if not notes:
        return f, notes
    padded = Cnf3(num_vars, f.clauses + tuple(extra))
    if f.num_vars <= MAX_VARS and nae3_decide(padded).sat != nae3_decide(f).sat:
        raise PadFailure("padding changed NAE satisfiability")
    for note in notes:
        log.info("nae padding: %s", note)
    return padded, notes


def random_cnf3(num_vars: int, num_clauses: int, rng: random.Random, distinct: bool = False) -> Cnf3:
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(num_vars), 3) if distinct else [rng.randrange(num_vars) for _ in range(3)]
        clauses.append(tuple(Lit(v, rng.random() < 0.5) for v in vs))
    return Cnf3(num_vars, tuple(clauses))


def random_triples(num_vars: int, num_sets: int, rng: random.Random) -> TripleSystem:
    """Positive triple system with three distinct variables per set."""
    sets = [tuple(Lit(v) for v in sorted(rng.sample(range(num_vars), 3))) for _ in range(num_sets)]
    return TripleSystem(num_vars, tuple(sets))
