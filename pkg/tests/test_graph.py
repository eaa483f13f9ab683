import itertools

import pytest
from hypothesis import given

from domatic_lab.errors import (
    DuplicateEdge,
    EmptyGraph,
    EndpointOutOfRange,
    GraphError,
    SelfLoop,
    VertexOutOfRange,
)
from domatic_lab.graph import (
    DecoratedGraph,
    Partition,
    build_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_stats,
    disjoint_union,
    empty_graph,
    has_isolated_vertex,
    is_dominating_set,
    is_two_colorable,
    join,
    path_graph,
    star_graph,
    wheel_graph,
)
from domatic_lab.errors import PartitionMismatch

from .conftest import graphs


def test_build_graph_k3():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g == complete_graph(3)
    assert g.labels == ("0", "1", "2")


@pytest.mark.parametrize(
    "n, edges, err",
    [
        (2, [(0, 0)], SelfLoop),
        (4, [(0, 1), (0, 1)], DuplicateEdge),
        (4, [(0, 1), (1, 0)], DuplicateEdge),
        (2, [(0, 2)], EndpointOutOfRange),
        (2, [(-1, 1)], EndpointOutOfRange),
    ],
)
def test_build_graph_rejects(n, edges, err):
    with pytest.raises(err):
        build_graph(n, edges)


def test_degree_stats():
    assert degree_stats(complete_graph(4)) == (3, 3)
    assert degree_stats(star_graph(3)) == (1, 3)
    assert degree_stats(empty_graph(1)) == (0, 0)
    with pytest.raises(EmptyGraph):
        degree_stats(empty_graph(0))


def test_join_examples():
    k2 = complete_graph(2)
    assert join(k2, k2) == complete_graph(4)
    assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)
    w = join(cycle_graph(4), complete_graph(1))
    assert (w.n, w.m) == (5, 8)


def test_join_labels_carry_operand_prefix():
    g = join(path_graph(2), complete_graph(1))
    assert g.labels == ("A:0", "A:1", "B:0")


def test_disjoint_union_examples():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    assert (g.n, g.m, len(connected_components(g))) == (6, 6, 2)
    two = disjoint_union(complete_graph(1), complete_graph(1))
    assert two.n == 2 and two.m == 0
    g = disjoint_union(complete_graph(2), complete_graph(3))
    assert (g.n, g.m) == (5, 4)


@given(graphs(max_n=4), graphs(max_n=4))
def test_join_counts(a, b):
    g = join(a, b)
    assert g.n == a.n + b.n
    assert g.m == a.m + b.m + a.n * b.n


@given(graphs(max_n=3), graphs(max_n=3), graphs(max_n=3))
def test_join_associative_as_edge_sets(a, b, c):
    left, right = join(join(a, b), c), join(a, join(b, c))
    assert left.n == right.n and left.edges == right.edges


def test_is_dominating_set(c4):
    assert is_dominating_set(c4, {0, 2})
    assert not is_dominating_set(c4, {0})
    assert is_dominating_set(c4, range(4))
    with pytest.raises(VertexOutOfRange):
        is_dominating_set(c4, {7})


@given(graphs(max_n=5))
def test_is_dominating_set_matches_double_loop(g):
    for r in range(g.n + 1):
        for d in itertools.combinations(range(g.n), r):
            naive = all(v in d or any(g.has_edge(v, u) for u in d) for v in range(g.n))
            assert is_dominating_set(g, d) == naive


def test_isolated_and_two_colorable():
    k3 = complete_graph(3)
    assert (has_isolated_vertex(k3), is_two_colorable(k3)) == (False, False)
    p3 = path_graph(3)
    assert (has_isolated_vertex(p3), is_two_colorable(p3)) == (False, True)
    g = disjoint_union(complete_graph(1), complete_graph(2))
    assert (has_isolated_vertex(g), is_two_colorable(g)) == (True, True)


def test_wheel_and_cycle_shapes():
    w = wheel_graph(5)
    assert (w.n, w.m, w.degree(0)) == (6, 10, 5)
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_graph_equality_ignores_labels():
    a = build_graph(2, [(0, 1)], ["x", "y"])
    assert a == complete_graph(2)
    assert hash(a) == hash(complete_graph(2))


def test_induced_subgraph():
    g = cycle_graph(5).induced([0, 1, 2])
    assert g == path_graph(3)


def test_decorated_graph_checks_triangles():
    k3 = complete_graph(3)
    assert DecoratedGraph(k3, ((0, 1, 2),)).covered_vertices() == {0, 1, 2}
    with pytest.raises(GraphError):
        DecoratedGraph(path_graph(3), ((0, 1, 2),))


def test_partition_validation():
    p = Partition.from_classes(2, [{0, 2}, {1}], 3)
    assert p.class_of == (0, 1, 0)
    assert p.classes() == [{0, 2}, {1}]
    with pytest.raises(PartitionMismatch):
        Partition(2, (0, 2))
    with pytest.raises(PartitionMismatch):
        Partition.from_classes(2, [{0}, {0, 1}], 2)
    with pytest.raises(PartitionMismatch):
        Partition.from_classes(2, [{0}], 2)
