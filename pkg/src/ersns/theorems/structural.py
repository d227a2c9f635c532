"""Checkers for the local-structure lemmas: the A/B/X partition around an
edge, the P3 + H lemma, and the endpoint lemma for path USNSs."""

from __future__ import annotations

from dataclasses import dataclass

from ..enumerate import EnumSpec, enumerate_er
from ..graph import Graph, GraphError, bits, connected_components, induced_mask
from ..graph import path as path_graph
from ..iso import canonical_form
from ..regularity import classify_er, sns_report
from .forbidden import scan_cells
from .report import (
    CONFIRMED,
    COUNTEREXAMPLE,
    NOT_APPLICABLE,
    VACUOUS,
    Check,
    PreconditionError,
    TheoremReport,
    Witness,
)


@dataclass(frozen=True)
class EdgeContext:
    """Partition of V(G) around an edge ``uv``.

    ``A``: adjacent to u only, ``B``: adjacent to v only, ``X``: adjacent to
    neither, ``W``: adjacent to both.  ``u`` and ``v`` themselves are in none.
    """

    u: int
    v: int
    A: frozenset[int]
    B: frozenset[int]
    X: frozenset[int]
    W: frozenset[int]

    @property
    def masks(self) -> tuple[int, int, int, int]:
        return tuple(sum(1 << x for x in s) for s in (self.A, self.B, self.X, self.W))


def edge_context(G: Graph, u: int, v: int) -> EdgeContext:
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise GraphError(f"edge context needs an edge; ({u}, {v}) is not one")
    ru, rv = G.rows[u], G.rows[v]
    uv = 1 << u | 1 << v
    others = G.vertex_mask() & ~uv
    A = ru & ~rv & others
    B = rv & ~ru & others
    W = ru & rv
    X = others & ~ru & ~rv
    fs = lambda m: frozenset(bits(m))  # noqa: E731
    return EdgeContext(u, v, fs(A), fs(B), fs(X), fs(W))


def _p3_components(G: Graph, mask: int) -> list[tuple[int, int, int]]:
    """P3 components of ``G[mask]`` as (end, middle, end)."""
    out = []
    rows = G.rows
    for comp in connected_components(induced_mask(G, mask)):
        if comp.bit_count() != 3:
            continue
        verts = [v for i, v in enumerate(bits(mask)) if comp >> i & 1]
        degs = [(rows[x] & mask).bit_count() for x in verts]
        if sorted(degs) == [1, 1, 2]:
            mid = verts[degs.index(2)]
            a, b = [x for x in verts if x != mid]
            out.append((a, mid, b))
    return out


def _component_of(G: Graph, mask: int, v: int) -> int:
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= G.rows[x]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp


def has_path4(G: Graph, mask: int) -> bool:
    """Whether ``G[mask]`` contains a path on 4 vertices (not necessarily induced)."""
    rows = G.rows
    for b in bits(mask):
        for c in bits(rows[b] & mask):
            if c < b:
                continue
            A = rows[b] & mask & ~(1 << c)
            D = rows[c] & mask & ~(1 << b)
            if A and D and not (A == D and A.bit_count() == 1):
                return True
    return False


def _require_er(G: Graph):
    er = classify_er(G)
    if er is None:
        raise PreconditionError("graph is not edge-regular")
    return er


def _has_p3_component(H: Graph) -> bool:
    return bool(_p3_components(H, H.vertex_mask()))


def check_p3h_property(G: Graph) -> TheoremReport:
    """For an ER graph with USNS ``P3 + H``, check that around every P3 edge
    ``w1 w2`` of an SNS the original edge ``uv`` sits outside every P3
    component of ``G[N(w1) ∩ N(w2)]`` and next to a path on four vertices.

    Two readings are recorded: ``component`` (the component holding u, v has a
    P4) and ``remainder`` (for every choice of P3 component, the rest holds u,
    v and has a P4).
    """
    er = _require_er(G)
    rep = sns_report(G)
    universe = {"graph_n": G.n, "params": list(er)}
    usns = rep.usns
    if usns is None or not _has_p3_component(usns):
        return TheoremReport("p3h", universe, NOT_APPLICABLE,
                             notes=["USNS absent or without a P3 component"])
    rows = G.rows
    witnesses = []
    tested = 0
    fail_component = fail_remainder = 0
    for u, v in G.edges():
        W = rows[u] & rows[v]
        for a, mid, b in _p3_components(G, W):
            for w1, w2 in ((a, mid), (b, mid)):
                tested += 1
                M = rows[w1] & rows[w2]
                p3s = _p3_components(G, M)
                comp = _component_of(G, M, u)
                comp_ok = (not any(u in t and v in t for t in p3s)) and has_path4(G, comp)
                rem_ok = True
                for t in p3s:
                    tm = sum(1 << x for x in t)
                    if tm >> u & 1 or tm >> v & 1 or not has_path4(G, M & ~tm):
                        rem_ok = False
                if not comp_ok:
                    fail_component += 1
                if not rem_ok:
                    fail_remainder += 1
                if not (comp_ok and rem_ok):
                    witnesses.append(Witness(G, (u, v), f"w1={w1} w2={w2} component_ok={comp_ok} remainder_ok={rem_ok}"))
    checks = [
        Check("component-reading", fail_component == 0, f"{fail_component} failing of {tested}"),
        Check("remainder-reading", fail_remainder == 0, f"{fail_remainder} failing of {tested}"),
    ]
    verdict = CONFIRMED if not witnesses else COUNTEREXAMPLE
    return TheoremReport("p3h", universe, verdict, witnesses, checks,
                         stats={"configurations": tested})


def check_p_lambda_endpoints(G: Graph) -> TheoremReport:
    """For ER graphs with USNS ``P_lambda`` (lambda >= 5): at each path end
    ``w1 ~ w2`` of the SNS of ``uv``, ``N(w1) ∩ N(w2)`` meets A(u, v) and
    B(u, v) in exactly one vertex each."""
    er = _require_er(G)
    universe = {"graph_n": G.n, "params": list(er)}
    if er.lam < 5:
        return TheoremReport("p-lambda", universe, NOT_APPLICABLE, notes=["lambda < 5"])
    rep = sns_report(G)
    if rep.usns_form != canonical_form(path_graph(er.lam)):
        return TheoremReport("p-lambda", universe, NOT_APPLICABLE,
                             notes=[f"USNS is not P_{er.lam}"])
    rows = G.rows
    witnesses = []
    tested = 0
    for u, v in G.edges():
        ctx = edge_context(G, u, v)
        A, B, _, W = ctx.masks
        ends = [w for w in bits(W) if (rows[w] & W).bit_count() == 1]
        for w1 in ends:
            (w2,) = bits(rows[w1] & W)
            M = rows[w1] & rows[w2]
            tested += 1
            ca, cb = (M & A).bit_count(), (M & B).bit_count()
            if ca != 1 or cb != 1:
                witnesses.append(Witness(G, (u, v), f"w1={w1} w2={w2} |A|={ca} |B|={cb}"))
    checks = [Check("endpoint-lemma", not witnesses, f"{len(witnesses)} failing of {tested}")]
    verdict = CONFIRMED if not witnesses else COUNTEREXAMPLE
    return TheoremReport("p-lambda", universe, verdict, witnesses, checks,
                         stats={"configurations": tested})


_CHECKERS = {"p3h": check_p3h_property, "p5": check_p_lambda_endpoints}


def scan_structural(theorem: str, lambdas, n_max: int,
                    cell_budget: float | None = None) -> TheoremReport:
    """Run a structural checker over every enumerated ER graph in range."""
    if theorem not in _CHECKERS:
        raise PreconditionError(f"unknown structural theorem {theorem!r}")
    check = _CHECKERS[theorem]
    lambdas = sorted(set(lambdas))
    cells = []
    applicable = 0
    witnesses = []
    complete = True
    total = 0
    for lam in lambdas:
        for n, d in scan_cells(lam, n_max):
            res = enumerate_er(EnumSpec(n, d, lam, time_budget=cell_budget, allow_large=True))
            complete &= res.stats.complete
            hits = 0
            for G in res.graphs:
                rep = check(G)
                if rep.verdict == NOT_APPLICABLE:
                    continue
                hits += 1
                witnesses += rep.witnesses
            applicable += hits
            total += len(res.graphs)
            cells.append({"n": n, "d": d, "lambda": lam, "graphs": len(res.graphs),
                          "applicable": hits, "complete": res.stats.complete})
    if witnesses:
        verdict = COUNTEREXAMPLE
    elif applicable == 0:
        verdict = VACUOUS
    else:
        verdict = CONFIRMED
    universe = {"lambdas": lambdas, "n_max": n_max, "cells_scanned": len(cells),
                "graphs_scanned": total, "applicable": applicable,
                "complete": complete, "cells": cells}
    notes = [] if applicable else ["no scanned graph satisfies the hypotheses"]
    return TheoremReport(f"{theorem}-scan", universe, verdict, witnesses, notes=notes)
