"""USNS behaviour under Cartesian, tensor and shadow constructions."""

from __future__ import annotations

from ..graph import Graph, check_size, complement, complete, cycle, k6_minus_pm, named_graph, petersen
from ..iso import isomorphic
from ..products import cartesian, shadow, tensor
from ..regularity import classify_er, sns_report
from .report import Check, PreconditionError, TheoremReport, verdict_from_checks


def catalog() -> dict[str, Graph]:
    """The ER graphs used for product-law checks."""
    return {
        "K3": complete(3),
        "K4": complete(4),
        "K5": complete(5),
        "C5": cycle(5),
        "k6_minus_pm": k6_minus_pm(),
        "petersen": petersen(),
        "petersen_complement": complement(petersen()),
    }


def _er_with_usns(G: Graph, name: str):
    er = classify_er(G)
    if er is None:
        raise PreconditionError(f"{name} is not edge-regular")
    rep = sns_report(G)
    if rep.usns is None:
        raise PreconditionError(f"{name} has no USNS")
    return er, rep.usns


def verify_cartesian_usns(G1: Graph, G2: Graph) -> TheoremReport:
    """ER factors with equal lambda and USNSs X, Y: the product is
    ER(n1 n2, d1 + d2, lambda) and has a USNS iff X ≅ Y, namely X."""
    er1, X = _er_with_usns(G1, "G1")
    er2, Y = _er_with_usns(G2, "G2")
    if er1.lam != er2.lam:
        raise PreconditionError(f"factors have different lambda ({er1.lam} vs {er2.lam})")
    check_size(G1.n * G2.n)
    P, _ = cartesian(G1, G2)
    er = classify_er(P)
    expected = (er1.n * er2.n, er1.d + er2.d, er1.lam)
    rep = sns_report(P)
    same = isomorphic(X, Y)
    usns = rep.usns
    class_graphs = [c.graph for c in rep.classes]
    checks = [
        Check("parameters", er is not None and tuple(er) == expected,
              f"got {tuple(er) if er else None}, expected {expected}"),
        Check("usns-iff-isomorphic-factors", (usns is not None) == same,
              f"factor USNSs isomorphic: {same}; product classes: {len(rep.classes)}"),
        Check("classes-from-factors",
              all(isomorphic(g, X) or isomorphic(g, Y) for g in class_graphs),
              "every product SNS is a factor USNS"),
    ]
    if usns is not None:
        checks.append(Check("usns-is-factor-usns", isomorphic(usns, X)))
    universe = {"factors": [list(er1), list(er2)], "product_n": P.n}
    return TheoremReport("cartesian-usns", universe, verdict_from_checks(checks),
                         checks=checks,
                         observations={"product_sns_classes": [c.form.graph6() for c in rep.classes],
                                       "class_counts": [c.count for c in rep.classes]})


def verify_tensor_usns(G1: Graph, G2: Graph) -> TheoremReport:
    """ER factors with USNSs H1, H2: the tensor product is
    ER(n1 n2, d1 d2, lambda1 lambda2) with USNS H1 ⊗ H2."""
    er1, H1 = _er_with_usns(G1, "G1")
    er2, H2 = _er_with_usns(G2, "G2")
    check_size(G1.n * G2.n)
    P, _ = tensor(G1, G2)
    er = classify_er(P)
    expected = (er1.n * er2.n, er1.d * er2.d, er1.lam * er2.lam)
    rep = sns_report(P)
    want, _ = tensor(H1, H2)
    checks = [
        Check("parameters", er is not None and tuple(er) == expected,
              f"got {tuple(er) if er else None}, expected {expected}"),
        Check("usns-is-tensor-of-usns", rep.usns is not None and isomorphic(rep.usns, want),
              f"{len(rep.classes)} SNS class(es)"),
    ]
    notes = []
    for er_k3, er_other, G_other in ((er1, er2, G2), (er2, er1, G1)):
        if tuple(er_k3) == (3, 2, 1):
            notes.append(
                f"K_3 factor: USNS is {er_other.lam} isolated vertices (lambda of the other "
                f"factor), not one per vertex of that factor ({G_other.n})")
            break
    universe = {"factors": [list(er1), list(er2)], "product_n": P.n}
    return TheoremReport("tensor-usns", universe, verdict_from_checks(checks),
                         checks=checks, notes=notes)


def verify_shadow_theorems(q: int, m: int, G: Graph) -> TheoremReport:
    """``D_m(G)`` is ER(mn, md, m lambda) with USNS ``D_m(H)``, and
    ``D_q(D_m(G)) ≅ D_qm(G)``."""
    if q < 1 or m < 1:
        raise PreconditionError("shadow multiplicities must be positive")
    er, H = _er_with_usns(G, "G")
    check_size(q * m * G.n)
    D, _ = shadow(m, G)
    er_d = classify_er(D)
    expected = (m * er.n, m * er.d, m * er.lam)
    rep = sns_report(D)
    want, _ = shadow(m, H)
    checks = [
        Check("parameters", er_d is not None and tuple(er_d) == expected,
              f"got {tuple(er_d) if er_d else None}, expected {expected}"),
        Check("usns-is-shadow-of-usns", rep.usns is not None and isomorphic(rep.usns, want)),
    ]
    if q >= 2 and m >= 2:
        chained, _ = shadow(q, D)
        direct, _ = shadow(q * m, G)
        checks.append(Check("shadow-chain", isomorphic(chained, direct),
                            f"D_{q}(D_{m}(G)) vs D_{q * m}(G)"))
    if er.d == er.n - 1:
        checks.append(Check("complete-shadow-is-turan",
                            isomorphic(D, named_graph("turan", m * er.n, er.n)),
                            f"D_{m}(K_{er.n}) vs T({m * er.n},{er.n})"))
    universe = {"q": q, "m": m, "base": list(er)}
    return TheoremReport("shadow", universe, verdict_from_checks(checks), checks=checks)
