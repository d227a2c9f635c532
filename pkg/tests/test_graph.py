import pytest
from hypothesis import given

from conftest import graphs
from ersns import (
    Graph,
    GraphError,
    NamedGraphSpec,
    SizeCeilingError,
    build_graph,
    classify_er,
    common_neighborhood,
    complement,
    connected_components,
    disjoint_sum,
    empty_graph,
    girth,
    induced_subgraph,
    isomorphic,
    m_copies,
    named_graph,
    neighborhood,
    shadow,
)

K3 = named_graph("complete", 3)
K6PM = named_graph("k6_minus_pm")
PETERSEN = named_graph("petersen")


def test_build_graph_basics():
    assert K3.edges() == [(0, 1), (0, 2), (1, 2)]
    assert build_graph(2, []).edge_count == 0
    G = build_graph(4, [(0, 1), (1, 0)])
    assert G.edges() == [(0, 1)] and G.n == 4


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_size_ceiling():
    with pytest.raises(SizeCeilingError):
        empty_graph(63)
    assert empty_graph(62).n == 62


def test_from_rows_validates_symmetry():
    with pytest.raises(GraphError):
        Graph.from_rows([0b10, 0b00])
    with pytest.raises(GraphError):
        Graph.from_rows([0b01])


def test_neighborhoods():
    assert neighborhood(K3, 0) == {1, 2}
    assert all(len(neighborhood(PETERSEN, v)) == 3 for v in range(10))
    assert neighborhood(K6PM, 0) == {2, 3, 4, 5}
    assert common_neighborhood(K3, 0, 1) == {2}
    assert common_neighborhood(K6PM, 0, 2) == {4, 5}
    assert common_neighborhood(empty_graph(2), 0, 1) == frozenset()
    with pytest.raises(GraphError):
        neighborhood(K3, 3)


def test_induced_subgraph():
    assert induced_subgraph(named_graph("complete", 5), {0, 1, 2}) == K3
    sub = induced_subgraph(K6PM, {4, 5})
    assert sub.n == 2 and sub.edge_count == 0
    assert induced_subgraph(K3, set()).n == 0


def test_disjoint_sum_and_copies():
    K1, K2 = empty_graph(1), named_graph("complete", 2)
    G = disjoint_sum(K2, K1)
    assert G.n == 3 and G.edges() == [(0, 1)]
    assert disjoint_sum(empty_graph(0), PETERSEN) == PETERSEN
    assert disjoint_sum(K1, K1) == empty_graph(2)
    assert m_copies(2, K1) == empty_graph(2)
    assert m_copies(1, PETERSEN) == PETERSEN
    M = m_copies(3, K2)
    assert (M.n, M.edge_count) == (6, 3)
    with pytest.raises(GraphError):
        m_copies(0, K1)


def test_complement():
    assert tuple(classify_er(complement(PETERSEN))) == (10, 6, 3)
    assert complement(named_graph("complete", 4)) == empty_graph(4)


@given(graphs())
def test_complement_involution(G):
    assert complement(complement(G)) == G
    assert G.edge_count + complement(G).edge_count == G.n * (G.n - 1) // 2


@given(graphs())
def test_rows_symmetric_loop_free(G):
    for v in range(G.n):
        assert not G.rows[v] >> v & 1
        for w in range(G.n):
            assert G.has_edge(v, w) == G.has_edge(w, v)
    assert sum(G.degrees()) == 2 * G.edge_count


def test_named_graphs():
    assert (K6PM.n, K6PM.edge_count, set(K6PM.degrees())) == (6, 12, {4})
    assert isomorphic(named_graph("star", 3), named_graph("path", 3))
    assert isomorphic(named_graph("turan", 9, 3), shadow(3, K3)[0])
    W = named_graph("wheel", 5)
    assert W.n == 6 and W.degree(5) == 5 and W.degree(0) == 3
    assert girth(PETERSEN) == 5
    assert named_graph(NamedGraphSpec.parse("turan:9,3")) == named_graph("turan", 9, 3)
    with pytest.raises(GraphError):
        named_graph("petersen", 3)
    with pytest.raises(GraphError):
        named_graph("dodecahedron")


def test_components():
    G = disjoint_sum(K3, named_graph("path", 2))
    assert sorted(connected_components(G)) == [0b00111, 0b11000]
    assert connected_components(empty_graph(0)) == []


def test_relabel_roundtrip():
    perm = (2, 0, 1)
    P = named_graph("path", 3)
    Q = P.relabel(perm)
    assert Q.edges() == [(0, 1), (0, 2)]  # vertex v is renamed perm[v]
    inv = tuple(perm.index(i) for i in range(3))
    assert Q.relabel(inv) == P
