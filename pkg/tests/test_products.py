import pytest
from hypothesis import given, settings

from conftest import graphs
from ersns import (
    SizeCeilingError,
    cartesian,
    classify_er,
    complement,
    empty_graph,
    isomorphic,
    named_graph,
    shadow,
    tensor,
)

K = lambda n: named_graph("complete", n)  # noqa: E731


def test_cartesian_examples():
    P, vmap = cartesian(K(4), named_graph("k6_minus_pm"))
    assert tuple(classify_er(P)) == (24, 7, 2)
    assert vmap.index(3, 5) == 23 and vmap.coords(23) == (3, 5)
    assert isomorphic(cartesian(K(1), named_graph("petersen"))[0], named_graph("petersen"))
    assert isomorphic(cartesian(K(2), K(2))[0], named_graph("cycle", 4))


def test_tensor_examples():
    assert tuple(classify_er(tensor(K(3), K(3))[0])) == (9, 4, 1)
    assert tensor(named_graph("petersen"), K(1))[0] == empty_graph(10)
    # K_n x K_m: complete m-partite K_{m,...,m} minus an (n-1)-factor
    T, vmap = tensor(K(3), K(4))
    # vertex (a, b) sits in part b; removed edges join equal first coordinates
    for u in range(12):
        for v in range(u + 1, 12):
            (a1, b1), (a2, b2) = vmap.coords(u), vmap.coords(v)
            assert T.has_edge(u, v) == (b1 != b2 and a1 != a2)
    assert T.edge_count == 12 * 6 // 2


def test_shadow_examples():
    assert isomorphic(shadow(3, K(3))[0], named_graph("turan", 9, 3))
    assert tuple(classify_er(shadow(2, named_graph("k6_minus_pm"))[0])) == (12, 8, 4)
    assert shadow(1, named_graph("petersen"))[0] == named_graph("petersen")


def test_size_ceiling():
    with pytest.raises(SizeCeilingError):
        cartesian(named_graph("petersen"), K(7))
    with pytest.raises(SizeCeilingError):
        shadow(7, named_graph("petersen"))


@given(graphs(max_n=5), graphs(max_n=5))
@settings(max_examples=60)
def test_product_adjacency_rules(G, H):
    C, vm = cartesian(G, H)
    T, _ = tensor(G, H)
    for u in range(C.n):
        for v in range(C.n):
            (a, b), (c, d) = vm.coords(u), vm.coords(v)
            assert C.has_edge(u, v) == ((a == c and H.has_edge(b, d)) or (b == d and G.has_edge(a, c)))
            assert T.has_edge(u, v) == (G.has_edge(a, c) and H.has_edge(b, d))


@given(graphs(max_n=6))
@settings(max_examples=60)
def test_shadow_rule(G):
    D, vm = shadow(2, G)
    for u in range(D.n):
        for v in range(D.n):
            (i, a), (j, b) = vm.coords(u), vm.coords(v)
            assert D.has_edge(u, v) == G.has_edge(a, b)
    assert D == shadow(2, complement(complement(G)))[0]
