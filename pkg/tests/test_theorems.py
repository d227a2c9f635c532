import json

import pytest

from ersns import (
    GraphError,
    SizeCeilingError,
    build_graph,
    complement,
    disjoint_sum,
    empty_graph,
    isomorphic,
    named_graph,
    shadow,
    tensor,
)
from ersns.theorems import (
    Family,
    PreconditionError,
    catalog,
    check_p3h_property,
    check_p_lambda_endpoints,
    conway_cartesian_report,
    conway_tensor_report,
    edge_context,
    load_cited_facts,
    scan_forbidden_usns,
    scan_structural,
    verify_cartesian_usns,
    verify_shadow_theorems,
    verify_tensor_usns,
)
from ersns.theorems.conway import CITED, COMPLETE_LAMBDA, D_LE_LAMBDA, DIV3, DIV_K1, N_LE_D
from ersns.theorems.report import COUNTEREXAMPLE, TheoremReport
from ersns.theorems.structural import has_path4

K = lambda n: named_graph("complete", n)  # noqa: E731
K6PM = named_graph("k6_minus_pm")


def test_edge_context():
    ctx = edge_context(K(3), 0, 1)
    assert (ctx.A, ctx.B, ctx.X, ctx.W) == (set(), set(), set(), {2})
    ctx = edge_context(K6PM, 0, 2)
    assert (ctx.W, ctx.A, ctx.B, ctx.X) == ({4, 5}, {3}, {1}, set())
    ctx = edge_context(named_graph("petersen"), 0, 1)
    assert (len(ctx.W), len(ctx.A), len(ctx.B), len(ctx.X)) == (0, 2, 2, 4)
    with pytest.raises(GraphError):
        edge_context(K6PM, 0, 1)


def test_has_path4():
    assert has_path4(named_graph("path", 4), 0b1111)
    assert not has_path4(named_graph("star", 4), 0b1111)
    assert not has_path4(K(3), 0b111)
    assert has_path4(named_graph("cycle", 4), 0b1111)


def test_family_parsing():
    assert Family.parse("kmn:1,2").lam == 3
    assert Family.parse("wheel:4").graph().n == 5
    assert Family.parse("p3lk1:2").lam == 5
    for bad in ("kmn:1,1", "kmn:2,2", "wheel:3", "star:2", "p5", "star", "kmn:a,b"):
        with pytest.raises(PreconditionError):
            Family.parse(bad)


def test_forbidden_scans_small():
    rep = scan_forbidden_usns("p3", 10)
    assert rep.verdict == "confirmed" and not rep.witnesses
    star = scan_forbidden_usns("star:3", 10)
    assert star.universe["graphs_scanned"] == rep.universe["graphs_scanned"]
    assert star.universe["cells"] == rep.universe["cells"]
    assert scan_forbidden_usns("p4", 3).verdict == "vacuous"


def test_forbidden_scan_parallel_matches_serial():
    a = scan_forbidden_usns("kmn:1,2", 9, workers=1)
    b = scan_forbidden_usns("kmn:1,2", 9, workers=2)
    assert a.universe == b.universe and a.observations == b.observations


def test_p3h_preconditions():
    with pytest.raises(PreconditionError):
        check_p3h_property(named_graph("path", 3))
    assert check_p3h_property(K6PM).verdict == "not_applicable"
    with pytest.raises(PreconditionError):
        check_p_lambda_endpoints(named_graph("wheel", 5))
    assert check_p_lambda_endpoints(K6PM).verdict == "not_applicable"
    assert check_p_lambda_endpoints(K(8)).verdict == "not_applicable"


def test_structural_scans_goldens():
    p5 = scan_structural("p5", [5], 11)
    assert p5.verdict == "vacuous" and p5.universe["graphs_scanned"] == 1
    p3h = scan_structural("p3h", range(7, 11), 10)
    assert p3h.verdict == "vacuous" and p3h.universe["graphs_scanned"] == 2


def test_counterexample_needs_witness():
    with pytest.raises(ValueError):
        TheoremReport("x", {}, COUNTEREXAMPLE)


def test_cartesian_law():
    rep = verify_cartesian_usns(K(4), K6PM)
    assert rep.verdict == "confirmed" and rep.universe["product_n"] == 24
    assert len(rep.observations["product_sns_classes"]) == 2
    rep = verify_cartesian_usns(K(3), K(3))
    assert rep.verdict == "confirmed" and len(rep.observations["product_sns_classes"]) == 1
    rep = verify_cartesian_usns(K6PM, shadow(2, K(3))[0])
    assert rep.observations["product_sns_classes"] == ["A?"]
    with pytest.raises(PreconditionError):
        verify_cartesian_usns(K(3), K(4))
    with pytest.raises(PreconditionError):
        verify_cartesian_usns(named_graph("path", 3), K(3))


def test_tensor_law():
    rep = verify_tensor_usns(K(5), K(4))
    assert rep.verdict == "confirmed"
    rep = verify_tensor_usns(K(3), K6PM)
    assert rep.verdict == "confirmed" and rep.notes
    assert isomorphic(tensor(empty_graph(1), empty_graph(2))[0], empty_graph(2))
    assert verify_tensor_usns(K6PM, named_graph("cycle", 5)).verdict == "confirmed"
    with pytest.raises(SizeCeilingError):
        verify_tensor_usns(named_graph("petersen"), complement(named_graph("petersen")))


def test_shadow_theorems():
    rep = verify_shadow_theorems(2, 3, K(3))
    assert rep.verdict == "confirmed"
    assert {c.name for c in rep.checks} >= {"shadow-chain", "complete-shadow-is-turan"}
    assert verify_shadow_theorems(2, 2, K(4)).verdict == "confirmed"
    with pytest.raises(PreconditionError):
        verify_shadow_theorems(0, 2, K(3))


def test_catalog_is_er_with_usns():
    assert set(catalog()) == {"K3", "K4", "K5", "C5", "k6_minus_pm", "petersen",
                              "petersen_complement"}


def _by_factors(rep):
    return {c.factors: c for c in rep.candidates}


def test_conway_cartesian():
    rep = conway_cartesian_report()
    assert rep.surviving == []
    cands = _by_factors(rep)
    assert cands[((3, 2, 1), (33, 12, 1))].reason == CITED
    assert cands[((9, 2, 1), (11, 12, 1))].reason == N_LE_D
    assert cands[((9, 4, 1), (11, 10, 1))].reason == COMPLETE_LAMBDA
    assert cands[((9, 6, 1), (11, 8, 1))].reason == DIV3
    assert cands[((9, 8, 1), (11, 6, 1))].reason == COMPLETE_LAMBDA
    assert rep.proof_reasons() == {CITED: 1, N_LE_D: 1, COMPLETE_LAMBDA: 2, DIV3: 1}


def test_conway_tensor():
    rep = conway_tensor_report()
    assert rep.surviving == []
    assert [c.reason for c in rep.candidates] == [D_LE_LAMBDA, DIV_K1]


def test_conway_without_cited_fact_survives(tmp_path):
    path = tmp_path / "facts.json"
    path.write_text(json.dumps({"facts": []}))
    rep = conway_cartesian_report(load_cited_facts(path))
    assert [c.factors for c in rep.surviving] == [((3, 2, 1), (33, 12, 1))]


def test_p3h_on_constructed_graph():
    # T(9,3) has USNS 3K_1: no P3 component, so not applicable
    assert check_p3h_property(named_graph("turan", 9, 3)).verdict == "not_applicable"
    G = disjoint_sum(K(3), build_graph(2, [(0, 1)]))
    with pytest.raises(PreconditionError):
        check_p3h_property(G)
