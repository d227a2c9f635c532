import random

import pytest
from hypothesis import strategies as st

from ersns import Graph, build_graph


def random_graph(n, p=0.5, rng=random):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return build_graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


@st.composite
def graph_and_perm(draw, max_n=9):
    G = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(range(G.n)))
    return G, tuple(perm)


@pytest.fixture
def rng():
    return random.Random(20260)
