"""Isomorph-free generation of edge-regular graphs.

Graphs are grown one vertex at a time by canonical augmentation.  A child
``C = P + v`` is kept only when ``v`` is the designated deletion vertex of
``C`` (maximal ``(degree, neighbour degree sum)``, ties broken by canonical
position) up to isomorphism of the deletion, so each isomorphism class is
reached from exactly one parent class.  Every intermediate graph on ``k``
vertices must still be extendable by ``r = n - k`` vertices:

* each degree lies in ``[d - r, d]``;
* each edge has ``c`` common neighbours with ``lambda - r <= c <= lambda``,
  and the deficit ``lambda - c`` fits in the spare degree of both endpoints.

These bounds hold for every induced subgraph of a graph in ER(n, d, lambda),
so no target graph is lost.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from .graph import MAX_VERTICES, Graph, GraphError, bits
from .iso import CanonicalForm, canonical_graph, canonical_labeling
from .regularity import classify_er

DEFAULT_MAX_N = 12


def er_parameter_feasible(n: int, d: int, lam: int) -> tuple[bool, str]:
    """Necessary arithmetic conditions for ER(n, d, lambda) to be non-empty."""
    if n < 1 or d < 0 or lam < 0:
        return False, "parameters must be non-negative with n >= 1"
    if d >= n:
        return False, f"degree {d} >= vertex count {n}"
    if lam >= d:
        return False, f"lambda {lam} >= degree {d}"
    if n * d % 2:
        return False, f"n*d = {n * d} is odd (handshake)"
    if n * d * lam % 6:
        return False, f"n*d*lambda = {n * d * lam} is not divisible by 6 (triangle count)"
    return True, "feasible"


@dataclass(frozen=True)
class EnumSpec:
    n: int
    d: int
    lam: int
    max_results: int | None = None
    time_budget: float | None = None
    allow_large: bool = False

    def __post_init__(self):
        limit = MAX_VERTICES if self.allow_large else DEFAULT_MAX_N
        if self.n > limit:
            hint = "" if self.allow_large else " (pass allow_large=True to go up to 62)"
            raise GraphError(f"enumeration limited to n <= {limit}{hint}")


@dataclass
class SearchStats:
    nodes: int = 0
    emitted: int = 0
    prunes: Counter = field(default_factory=Counter)
    elapsed: float = 0.0
    complete: bool = True
    note: str = ""

    def merge(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            self.nodes + other.nodes,
            self.emitted + other.emitted,
            self.prunes + other.prunes,
            self.elapsed + other.elapsed,
            self.complete and other.complete,
            "; ".join(x for x in (self.note, other.note) if x),
        )

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "nodes": self.nodes,
            "emitted": self.emitted,
            "prunes": dict(sorted(self.prunes.items())),
            "complete": self.complete,
            "note": self.note,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class EnumResult:
    graphs: list[Graph]
    forms: list[CanonicalForm]
    stats: SearchStats

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self):
        return len(self.graphs)


class _Budget(Exception):
    pass


def _extensions(rows, n, d, lam, prunes):
    """Neighbour masks ``S`` for a new vertex that keep the graph extendable."""
    k = len(rows)
    r = n - k - 1
    lo_deg = d - r
    lo_lam = lam - r
    deg = [x.bit_count() for x in rows]
    must = forbid = 0
    for u in range(k):
        if deg[u] >= d:
            forbid |= 1 << u
        if deg[u] < lo_deg:
            if deg[u] + 1 < lo_deg:
                prunes["degree"] += 1
                return
            must |= 1 << u
    if (must & forbid) or must.bit_count() > d:
        prunes["degree"] += 1
        return
    # edges (a, u) with a < u, keyed by the later endpoint
    back = []
    for u in range(k):
        lst = []
        for a in bits(rows[u] & ((1 << u) - 1)):
            lst.append((a, (rows[a] & rows[u]).bit_count()))
        back.append(lst)

    out = []

    def rec(u, S, size):
        if u == k:
            if size < lo_deg:
                prunes["degree"] += 1
                return
            for x in bits(S):
                c = (rows[x] & S).bit_count()
                if c < lo_lam or lam - c > min(d - size, d - deg[x] - 1):
                    prunes["lambda_lower"] += 1
                    return
            out.append(S)
            return
        bit = 1 << u
        for inc in (True, False):
            if inc:
                if forbid & bit or size >= d:
                    continue
                S2 = S | bit
                ok = True
                for x in bits(S2 & (rows[u] | bit)):
                    if (rows[x] & S2).bit_count() > lam:
                        prunes["lambda_upper"] += 1
                        ok = False
                        break
                if not ok:
                    continue
            else:
                if must & bit:
                    continue
                S2 = S
            du = d - deg[u] - inc
            ok = True
            for a, c in back[u]:
                both = inc and S2 >> a & 1
                c2 = c + both
                if c2 > lam:
                    prunes["lambda_upper"] += 1
                    ok = False
                    break
                gap = lam - c2
                if gap > r or gap > du or gap > d - deg[a] - (S2 >> a & 1):
                    prunes["lambda_lower"] += 1
                    ok = False
                    break
            if ok:
                rec(u + 1, S2, size + inc)

    rec(0, 0, 0)
    yield from out


def _invariant(rows, v):
    deg = rows[v].bit_count()
    return deg, sum(rows[u].bit_count() for u in bits(rows[v]))


def _designated(rows, form_order):
    """Deletion vertex: maximal invariant, earliest canonical position."""
    invs = [_invariant(rows, v) for v in range(len(rows))]
    top = max(invs)
    for v in form_order:
        if invs[v] == top:
            return v
    raise AssertionError("unreachable")


def _delete(rows, v):
    keep = [u for u in range(len(rows)) if u != v]
    pos = {u: i for i, u in enumerate(keep)}
    out = []
    for u in keep:
        m = 0
        for w in bits(rows[u] & ~(1 << v)):
            m |= 1 << pos[w]
        out.append(m)
    return Graph(len(keep), tuple(out))


def enumerate_er(spec: EnumSpec) -> EnumResult:
    """All of ER(n, d, lambda) up to isomorphism, as canonically labeled graphs.

    Output is sorted by canonical form.  If ``max_results`` or ``time_budget``
    cut the search short, ``stats.complete`` is False.
    """
    n, d, lam = spec.n, spec.d, spec.lam
    stats = SearchStats()
    start = time.monotonic()
    ok, reason = er_parameter_feasible(n, d, lam)
    if not ok:
        stats.note = f"infeasible: {reason}"
        return EnumResult([], [], stats)

    deadline = None if spec.time_budget is None else start + spec.time_budget
    found: dict[CanonicalForm, Graph] = {}

    def grow(G: Graph, form: CanonicalForm):
        stats.nodes += 1
        if deadline is not None and time.monotonic() > deadline:
            raise _Budget("time budget exceeded")
        k = G.n
        if k == n:
            er = classify_er(G)
            if er is None or tuple(er) != (n, d, lam):  # pragma: no cover - pruning guarantees this
                stats.prunes["final"] += 1
                return
            found[form] = G
            stats.emitted += 1
            if spec.max_results is not None and len(found) >= spec.max_results:
                raise _Budget("max_results reached")
            return
        children: dict[CanonicalForm, Graph] = {}
        for S in _extensions(G.rows, n, d, lam, stats.prunes):
            rows = [row | ((S >> u & 1) << k) for u, row in enumerate(G.rows)]
            rows.append(S)
            inv = _invariant(rows, k)
            if any(_invariant(rows, u) > inv for u in range(k)):
                stats.prunes["invariant"] += 1
                continue
            child = Graph(k + 1, tuple(rows))
            cform, order = canonical_labeling(child)
            if cform in children:
                stats.prunes["duplicate"] += 1
                continue
            v = _designated(child.rows, order)
            if v != k and canonical_labeling(_delete(child.rows, v))[0] != form:
                stats.prunes["parent"] += 1
                continue
            children[cform] = canonical_graph(child)
        for cform in sorted(children):
            grow(children[cform], cform)

    seed = Graph(1, (0,))
    try:
        grow(seed, canonical_labeling(seed)[0])
    except _Budget as exc:
        stats.complete = False
        stats.note = str(exc)
    stats.elapsed = time.monotonic() - start
    forms = sorted(found)
    return EnumResult([found[f] for f in forms], forms, stats)


def er(n: int, d: int, lam: int, **kwargs) -> EnumResult:
    """Shorthand for ``enumerate_er(EnumSpec(n, d, lam, ...))``."""
    return enumerate_er(EnumSpec(n, d, lam, **kwargs))
