import itertools

from hypothesis import given

from conftest import graph_and_perm, graphs
from ersns import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    complement,
    empty_graph,
    named_graph,
    shadow,
)

K3 = named_graph("complete", 3)


def brute_iso(G, H):
    if G.n != H.n or G.edge_count != H.edge_count:
        return False
    return any(G.relabel(p) == H for p in itertools.permutations(range(G.n)))


def test_examples():
    assert canonical_form(named_graph("path", 3)) == canonical_form(named_graph("star", 3))
    C5 = named_graph("cycle", 5)
    assert canonical_form(C5) == canonical_form(complement(C5))
    assert brute_iso(C5, complement(C5))
    assert are_isomorphic(K3, named_graph("path", 3)) == (False, None)
    ok, perm = are_isomorphic(shadow(2, K3)[0], named_graph("k6_minus_pm"))
    assert ok and shadow(2, K3)[0].relabel(perm) == named_graph("k6_minus_pm")
    D = shadow(2, shadow(3, K3)[0])[0]
    assert are_isomorphic(D, shadow(6, K3)[0])[0]


def test_canonical_labeling_order():
    G = named_graph("wheel", 5)
    form, order = canonical_labeling(G)
    inv = [0] * G.n
    for i, v in enumerate(order):
        inv[v] = i
    assert G.relabel(tuple(inv)) == form.graph() == canonical_graph(G)


def test_edge_cases():
    assert canonical_form(empty_graph(0)).n == 0
    assert canonical_form(empty_graph(1)) != canonical_form(empty_graph(2))


def test_large_regular_graphs():
    T = named_graph("turan", 60, 3)
    perm = tuple(reversed(range(60)))
    assert are_isomorphic(T, T.relabel(perm))[0]
    assert canonical_form(named_graph("petersen")) != canonical_form(
        named_graph("cycle", 10))


@given(graph_and_perm())
def test_invariant_under_relabeling(gp):
    G, perm = gp
    assert canonical_form(G) == canonical_form(G.relabel(perm))
    ok, witness = are_isomorphic(G, G.relabel(perm))
    assert ok and G.relabel(witness) == G.relabel(perm)


@given(graphs(max_n=6), graphs(max_n=6))
def test_agrees_with_brute_force(G, H):
    assert are_isomorphic(G, H)[0] == brute_iso(G, H)
