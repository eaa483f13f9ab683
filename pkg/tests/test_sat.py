import itertools
import random

import pytest
from hypothesis import given

from domatic_lab.errors import ContiguousSet, NegativeLiteral, ParseError, TooLarge
from domatic_lab.exactset import ExactSet
from domatic_lab.sat import (
    Cnf3,
    Lit,
    TripleSystem,
    max_sat_stats,
    nae3_decide,
    nae_closure,
    one_in_three_decide,
    pad_for_nae,
    random_cnf3,
    random_triples,
    sat3_decide,
)

from .conftest import cnf3s, triple_systems

x, y, z, w, v = (Lit(i) for i in range(5))


def _every_assignment(nv):
    return itertools.product((False, True), repeat=nv)


class TestLiterals:
    def test_int_round_trip(self):
        assert Lit.from_int(-3) == Lit(2, True)
        assert Lit(2, True).to_int() == -3
        assert ~Lit(0) == Lit(0, True)

    def test_zero_literal(self):
        with pytest.raises(ParseError):
            Lit.from_int(0)

    def test_clause_width(self):
        with pytest.raises(ParseError):
            Cnf3(2, ((x, y),))

    def test_variable_range(self):
        with pytest.raises(ParseError):
            Cnf3(1, ((x, y, x),))

    def test_json_round_trip(self):
        f = Cnf3(3, ((x, ~y, z),))
        assert Cnf3.from_json(f.to_json()) == f
        assert f.to_json() == {"num_vars": 3, "clauses": [[1, -2, 3]]}
        s = TripleSystem(3, ((x, y, z),))
        assert TripleSystem.from_json(s.to_json()) == s


class TestSat3:
    def test_examples(self):
        assert sat3_decide(Cnf3(1, ((x, x, x),))).assignment == (True,)
        assert not sat3_decide(Cnf3(1, ((x, x, x), (~x, ~x, ~x)))).sat
        assert sat3_decide(Cnf3(3, ((x, y, z),))).sat

    def test_guard(self):
        with pytest.raises(TooLarge):
            sat3_decide(Cnf3(25, ()))


class TestNae:
    def test_examples(self):
        assert nae3_decide(Cnf3(3, ((x, y, z),))).sat
        assert not nae3_decide(Cnf3(1, ((x, x, x),))).sat
        assert nae3_decide(Cnf3(3, ((x, y, z), (~x, ~y, ~z)))).sat

    @given(cnf3s())
    def test_matches_double_loop(self, f):
        want = any(
            all(any(l.value(t) for l in c) and any(not l.value(t) for l in c) for c in f.clauses)
            for t in _every_assignment(f.num_vars)
        )
        res = nae3_decide(f)
        assert res.sat == want
        if res.sat:
            assert all(len({l.value(res.assignment) for l in c}) == 2 for c in f.clauses)

    def test_closure_example(self):
        f = Cnf3(3, ((x, y, z),))
        assert nae_closure(f).clauses == ((x, y, z), (~x, ~y, ~z))

    @given(cnf3s(max_clauses=3))
    def test_closure_preserves_nae(self, f):
        g = nae_closure(f)
        assert g.m == 2 * f.m
        assert nae3_decide(g).sat == nae3_decide(f).sat

    @given(cnf3s(max_clauses=3))
    def test_closure_idempotent_as_clause_set(self, f):
        assert set(nae_closure(nae_closure(f)).clauses) == set(nae_closure(f).clauses)


class TestPadding:
    def test_adds_variables_and_occurrences(self):
        f = Cnf3(1, ((x, x, x),))
        padded, notes = pad_for_nae(f)
        assert padded.num_vars == 2 and padded.variables_used() == {0, 1}
        assert notes

    def test_untouched_when_fine(self):
        f = Cnf3(2, ((x, y, ~y),))
        assert pad_for_nae(f) == (f, [])

    @given(cnf3s(max_vars=5, max_clauses=3))
    def test_preserves_nae_status(self, f):
        padded, _ = pad_for_nae(f)
        assert padded.variables_used() == set(range(padded.num_vars))
        assert padded.num_vars >= 2
        assert nae3_decide(padded).sat == nae3_decide(f).sat


class TestOneInThree:
    def test_single_set(self):
        res = one_in_three_decide(TripleSystem(3, ((x, y, z),)))
        assert res.sat and sum(res.assignment) == 1

    def test_five_variable_example(self):
        s = TripleSystem(5, ((x, y, z), (x, y, w), (z, w, v)))
        res = one_in_three_decide(s)
        assert res.sat
        for triple in s.sets:
            assert sum(l in res.true_literals for l in triple) == 1

    def test_multiset_counts_multiplicity(self):
        # x true would hit {x, x, y} twice, so only y may be true
        res = one_in_three_decide(TripleSystem(2, ((x, x, y),)))
        assert res.assignment == (False, True)
        assert not one_in_three_decide(TripleSystem(1, ((x, x, x),))).sat

    def test_all_triples_on_four_unsat(self):
        sets = tuple(tuple(Lit(i) for i in c) for c in itertools.combinations(range(4), 3))
        assert not one_in_three_decide(TripleSystem(4, sets)).sat

    @given(triple_systems())
    def test_witness_hits_once(self, s):
        res = one_in_three_decide(s)
        if res.sat:
            assert all(sum(l.value(res.assignment) for l in t) == 1 for t in s.sets)
        else:
            for t in _every_assignment(s.num_vars):
                assert any(sum(l.value(t) for l in tr) != 1 for tr in s.sets)

    def test_positivity(self):
        s = TripleSystem(3, ((x, ~y, z),))
        assert not s.is_positive()
        with pytest.raises(NegativeLiteral):
            s.require_positive()
        # the oracle itself accepts negative literals
        assert one_in_three_decide(s).sat

    def test_literals_first_occurrence_order(self):
        s = TripleSystem(4, ((z, x, z), (w, x, y)))
        assert s.literals() == [z, x, w, y]


class TestMaxSat:
    def test_examples(self):
        f = Cnf3(3, ((x, y, z), (~x, y, z)))
        assert max_sat_stats(f) == (2, 0)
        assert max_sat_stats(Cnf3(1, ((x, x, x), (~x, ~x, ~x)))) == (1, 1)
        assert max_sat_stats(Cnf3(1, ())) == (0, 0)

    @given(cnf3s(max_clauses=5))
    def test_u_zero_iff_sat(self, f):
        s, u = max_sat_stats(f)
        assert s + u == f.m
        assert (u == 0) == sat3_decide(f).sat


class TestGenerators:
    def test_seeded(self):
        a = random_cnf3(5, 4, random.Random(7))
        b = random_cnf3(5, 4, random.Random(7))
        assert a == b

    def test_triples_distinct_positive(self):
        s = random_triples(6, 5, random.Random(1))
        assert s.is_positive()
        assert all(len({l.var for l in t}) == 3 for t in s.sets)


class TestExactSet:
    def test_parse(self):
        assert ExactSet.parse("9,11").values == (9, 11)
        assert 11 in ExactSet.parse("11,9")

    @pytest.mark.parametrize("vals", [(), (2, 3), (-1, 4), (5, 7, 8)])
    def test_rejects(self, vals):
        with pytest.raises(ContiguousSet):
            ExactSet(vals)

    def test_zero_allowed(self):
        assert ExactSet((0, 2)).values == (0, 2)
