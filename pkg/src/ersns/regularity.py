"""Regularity classes and shared neighborhood structures.

An SNS is the subgraph induced by ``N(u) ∩ N(v)`` for an edge ``uv``; a graph
has a USNS when all its SNSs are isomorphic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph import Graph, GraphError, bits, connected_components, induced_mask
from .iso import CanonicalForm, canonical_form


@dataclass(frozen=True)
class ERParams:
    n: int
    d: int
    lam: int

    def __post_init__(self):
        if not self.n > self.d > self.lam >= 0:
            raise ValueError(f"ER parameters need n > d > lambda >= 0, got {tuple(self)}")

    def __iter__(self):
        return iter((self.n, self.d, self.lam))


@dataclass(frozen=True)
class SRParams:
    n: int
    d: int
    lam: int
    mu: int

    def __iter__(self):
        return iter((self.n, self.d, self.lam, self.mu))

    @property
    def er(self) -> ERParams:
        return ERParams(self.n, self.d, self.lam)


@dataclass(frozen=True)
class RCAParams:
    n: int
    d: int
    k: int

    def __iter__(self):
        return iter((self.n, self.d, self.k))


def regular_degree(G: Graph) -> int | None:
    if G.n == 0:
        return None
    degs = set(G.degrees())
    return degs.pop() if len(degs) == 1 else None


def edge_lambdas(G: Graph) -> set[int]:
    rows = G.rows
    return {(rows[u] & rows[v]).bit_count() for u, v in G.edges()}


def classify_er(G: Graph) -> ERParams | None:
    """Return ``(n, d, lambda)`` if ``G`` is edge-regular; edgeless graphs are not."""
    d = regular_degree(G)
    if not d:
        return None
    lams = edge_lambdas(G)
    if len(lams) != 1:
        return None
    return ERParams(G.n, d, lams.pop())


def classify_sr(G: Graph) -> SRParams | None:
    er = classify_er(G)
    if er is None:
        return None
    rows = G.rows
    mus = set()
    for u in range(G.n):
        non = ~rows[u] & G.vertex_mask() & ~((1 << (u + 1)) - 1)
        for v in bits(non):
            mus.add((rows[u] & rows[v]).bit_count())
            if len(mus) > 1:
                return None
    if not mus:
        return None
    return SRParams(er.n, er.d, er.lam, mus.pop())


def maximal_cliques(G: Graph) -> list[int]:
    """All maximal cliques as vertex masks (Bron-Kerbosch with pivoting)."""
    rows = G.rows
    out: list[int] = []

    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        pivot = max(bits(P | X), key=lambda u: (rows[u] & P).bit_count())
        for v in bits(P & ~rows[pivot]):
            expand(R | 1 << v, P & rows[v], X & rows[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        expand(0, G.vertex_mask(), 0)
    return out


def clique_number(G: Graph) -> int:
    return max((c.bit_count() for c in maximal_cliques(G)), default=0)


def classify_rca(G: Graph) -> RCAParams | None:
    """Regular clique assembly: regular, ω ≥ 2, all maximal cliques maximum,
    every edge in exactly one maximum clique."""
    d = regular_degree(G)
    if d is None:
        return None
    cliques = maximal_cliques(G)
    k = max(c.bit_count() for c in cliques)
    if k < 2 or any(c.bit_count() != k for c in cliques):
        return None
    cover = Counter()
    for c in cliques:
        vs = list(bits(c))
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                cover[u, v] += 1
    if any(cover[e] != 1 for e in G.edges()):
        return None
    return RCAParams(G.n, d, k)


def is_component_regular(G: Graph) -> bool:
    rows = G.rows
    for comp in connected_components(G):
        if len({(rows[v] & comp).bit_count() for v in bits(comp)}) > 1:
            return False
    return True


def sns_mask(G: Graph, u: int, v: int) -> int:
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphError(f"vertex out of range for a graph on {G.n} vertices")
    if not G.has_edge(u, v):
        raise GraphError(f"SNS is only defined for adjacent vertices; {u} and {v} are not")
    return G.rows[u] & G.rows[v]


def sns(G: Graph, u: int, v: int) -> Graph:
    return induced_mask(G, sns_mask(G, u, v))


@dataclass(frozen=True)
class SNSClass:
    form: CanonicalForm
    count: int

    @property
    def graph(self) -> Graph:
        return self.form.graph()


@dataclass(frozen=True)
class SNSReport:
    entries: tuple[tuple[tuple[int, int], CanonicalForm], ...]
    classes: tuple[SNSClass, ...]
    # how many edges share each SNS vertex set
    vertex_sets: dict[int, int] = field(compare=False)

    @property
    def vacuous(self) -> bool:
        return not self.entries

    @property
    def usns(self) -> Graph | None:
        return self.classes[0].graph if len(self.classes) == 1 else None

    @property
    def usns_form(self) -> CanonicalForm | None:
        return self.classes[0].form if len(self.classes) == 1 else None

    def class_of(self, u: int, v: int) -> CanonicalForm:
        e = (min(u, v), max(u, v))
        for edge, form in self.entries:
            if edge == e:
                return form
        raise GraphError(f"{e} is not an edge")


def sns_report(G: Graph) -> SNSReport:
    entries = []
    tally: Counter = Counter()
    sets: Counter = Counter()
    forms: dict[int, CanonicalForm] = {}
    for u, v in G.edges():
        m = G.rows[u] & G.rows[v]
        form = forms.get(m)
        if form is None:
            form = forms[m] = canonical_form(induced_mask(G, m))
        entries.append(((u, v), form))
        tally[form] += 1
        sets[m] += 1
    classes = tuple(SNSClass(f, tally[f]) for f in sorted(tally))
    return SNSReport(tuple(entries), classes, dict(sets))
