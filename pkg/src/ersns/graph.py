"""Immutable simple graphs on at most 62 vertices.

Adjacency is stored as one integer bitmask per vertex, so a neighborhood
intersection is a single ``&``.  Untrusted rows go through
:meth:`Graph.from_rows`, which checks symmetry and loop-freedom; the
constructors below preserve both by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 62


class GraphError(ValueError):
    """Invalid vertex, edge or construction parameter."""


class SizeCeilingError(GraphError):
    """A graph would exceed the 62-vertex ceiling."""


def check_size(n: int) -> None:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if n > MAX_VERTICES:
        raise SizeCeilingError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex ceiling")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        check_size(n)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")
        return cls(n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        new = [0] * self.n
        for v, row in enumerate(self.rows):
            m = 0
            for u in bits(row):
                m |= 1 << perm[u]
            new[perm[v]] = m
        return Graph(self.n, tuple(new))


def _vertex(G: Graph, v: int) -> int:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for a graph on {G.n} vertices")
    return v


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates and reversed pairs collapse."""
    check_size(n)
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    check_size(n)
    return Graph(n, (0,) * n)


def neighborhood(G: Graph, v: int) -> frozenset[int]:
    return frozenset(bits(G.rows[_vertex(G, v)]))


def common_neighborhood(G: Graph, u: int, v: int) -> frozenset[int]:
    """N(u) ∩ N(v); adjacency of ``u`` and ``v`` is not required."""
    _vertex(G, u), _vertex(G, v)
    if u == v:
        raise GraphError("common neighborhood needs two distinct vertices")
    return frozenset(bits(G.rows[u] & G.rows[v]))


def induced_mask(G: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertices of ``mask``, relabeled in ascending order."""
    verts = list(bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        m = 0
        for u in bits(G.rows[v] & mask):
            m |= 1 << pos[u]
        rows.append(m)
    return Graph(len(verts), tuple(rows))


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    mask = 0
    for v in S:
        mask |= 1 << _vertex(G, v)
    return induced_mask(G, mask)


def disjoint_sum(G: Graph, H: Graph) -> Graph:
    check_size(G.n + H.n)
    shift = G.n
    return Graph(G.n + H.n, G.rows + tuple(r << shift for r in H.rows))


def m_copies(m: int, G: Graph) -> Graph:
    if m < 1:
        raise GraphError(f"copy count must be positive, got {m}")
    check_size(m * G.n)
    out = G
    for _ in range(m - 1):
        out = disjoint_sum(out, G)
    return out


def complement(G: Graph) -> Graph:
    full = G.vertex_mask()
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.rows)))


def connected_components(G: Graph) -> list[int]:
    """Component vertex masks, ordered by lowest vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for forests."""
    best = None
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in bits(G.rows[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    c = dist[x] + dist[y] + 1
                    if best is None or c < best:
                        best = c
    return best


# --- named families -------------------------------------------------------

NAMED_KINDS = (
    "complete", "empty", "path", "cycle", "star", "wheel", "turan",
    "complete_bipartite", "petersen", "k6_minus_pm",
)


@dataclass(frozen=True)
class NamedGraphSpec:
    kind: str
    params: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "NamedGraphSpec":
        """Parse ``kind`` or ``kind:p1,p2`` (e.g. ``turan:9,3``)."""
        kind, _, rest = text.partition(":")
        kind = kind.strip().lower().replace("-", "_")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest.strip() else ()
        except ValueError:
            raise GraphError(f"bad parameters in named graph {text!r}") from None
        return cls(kind, params)


_ARITY = {
    "complete": 1, "empty": 1, "path": 1, "cycle": 1, "star": 1, "wheel": 1,
    "turan": 2, "complete_bipartite": 2, "petersen": 0, "k6_minus_pm": 0,
}


def named_graph(spec: NamedGraphSpec | str, *params: int) -> Graph:
    """Construct a named graph with a fixed, documented labeling.

    ``star(l)`` has ``l`` vertices (centre 0), ``wheel(m)`` has ``m + 1``
    vertices with the hub last, ``turan(n, parts)`` puts vertex ``v`` in part
    ``v // (n // parts)``, and ``k6_minus_pm`` removes the matching 01, 23, 45.
    """
    if isinstance(spec, str):
        spec = NamedGraphSpec(spec, tuple(params))
    kind, p = spec.kind, spec.params
    if kind not in _ARITY:
        raise GraphError(f"unknown graph kind {kind!r}")
    if len(p) != _ARITY[kind]:
        raise GraphError(f"{kind} takes {_ARITY[kind]} parameter(s), got {len(p)}")
    if any(x < 0 for x in p):
        raise GraphError(f"{kind} parameters must be non-negative")

    if kind == "complete":
        (n,) = p
        return build_graph(n, combinations(range(n), 2))
    if kind == "empty":
        return empty_graph(p[0])
    if kind == "path":
        (n,) = p
        if n < 1:
            raise GraphError("path needs at least one vertex")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = p
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        (l,) = p
        if l < 2:
            raise GraphError("star needs at least 2 vertices")
        return build_graph(l, [(0, i) for i in range(1, l)])
    if kind == "wheel":
        (m,) = p
        if m < 3:
            raise GraphError("wheel needs a rim of at least 3 vertices")
        rim = [(i, (i + 1) % m) for i in range(m)]
        return build_graph(m + 1, rim + [(i, m) for i in range(m)])
    if kind == "turan":
        n, parts = p
        if parts < 1 or n % parts:
            raise GraphError(f"turan: {parts} parts do not divide {n} vertices")
        size = n // parts
        return build_graph(n, [(u, v) for u, v in combinations(range(n), 2)
                               if u // size != v // size])
    if kind == "complete_bipartite":
        a, b = p
        if a < 1 or b < 1:
            raise GraphError("complete_bipartite parts must be non-empty")
        return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if kind == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        return build_graph(10, edges)
    # k6_minus_pm
    matching = {(0, 1), (2, 3), (4, 5)}
    return build_graph(6, [e for e in combinations(range(6), 2) if e not in matching])


def complete(n: int) -> Graph:
    return named_graph("complete", n)


def path(n: int) -> Graph:
    return named_graph("path", n)


def cycle(n: int) -> Graph:
    return named_graph("cycle", n)


def petersen() -> Graph:
    return named_graph("petersen")


def k6_minus_pm() -> Graph:
    return named_graph("k6_minus_pm")
