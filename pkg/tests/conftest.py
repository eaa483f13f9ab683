import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from domatic_lab.graph import Graph, build_graph
from domatic_lab.sat import Cnf3, Lit, TripleSystem

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def cnf3s(draw, max_vars=4, max_clauses=4, min_clauses=0):
    nv = draw(st.integers(1, max_vars))
    lit = st.builds(Lit, st.integers(0, nv - 1), st.booleans())
    clauses = draw(st.lists(st.tuples(lit, lit, lit), min_size=min_clauses, max_size=max_clauses))
    return Cnf3(nv, tuple(clauses))


@st.composite
def triple_systems(draw, max_vars=5, max_sets=4):
    nv = draw(st.integers(1, max_vars))
    lit = st.builds(Lit, st.integers(0, nv - 1))
    sets = draw(st.lists(st.tuples(lit, lit, lit), min_size=1, max_size=max_sets))
    return TripleSystem(nv, tuple(sets))


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture(scope="session")
def hard_join() -> Graph:
    """Join instance whose five-class refutation takes minutes."""
    from domatic_lab.corpus import all_triples_on_four
    from domatic_lab.reductions import thm6_construct

    u = all_triples_on_four()
    return thm6_construct(u, u)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
