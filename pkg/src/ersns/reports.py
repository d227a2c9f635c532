"""JSON report documents.

Everything written to stdout is deterministic: wall-clock figures are kept
out of the payload and go to stderr with the search statistics.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

from .enumerate import SearchStats
from .formats import write_graph6
from .graph import Graph
from .regularity import (
    SNSReport,
    classify_er,
    classify_rca,
    classify_sr,
    is_component_regular,
    regular_degree,
    sns_report,
)
from .theorems.conway import FactorizationReport
from .theorems.report import TheoremReport

SCHEMA_VERSION = "1.0"


def classification_payload(G: Graph) -> dict[str, Any]:
    er = classify_er(G)
    sr = classify_sr(G)
    rca = classify_rca(G)
    return {
        "type": "classification",
        "n": G.n,
        "edges": G.edge_count,
        "regular_degree": regular_degree(G),
        "er": list(er) if er else None,
        "sr": list(sr) if sr else None,
        "rca": list(rca) if rca else None,
    }


def sns_payload(rep: SNSReport) -> dict[str, Any]:
    usns = rep.usns_form
    return {
        "type": "sns_report",
        "edges": len(rep.entries),
        "vacuous": rep.vacuous,
        "usns": usns.graph6() if usns else None,
        "usns_component_regular": is_component_regular(rep.usns) if usns else None,
        "classes": [{"graph6": c.form.graph6(), "n": c.form.n, "count": c.count}
                    for c in rep.classes],
        "distinct_vertex_sets": len(rep.vertex_sets),
        "max_edges_per_vertex_set": max(rep.vertex_sets.values(), default=0),
    }


def analysis_payload(G: Graph) -> dict[str, Any]:
    out = classification_payload(G)
    out["type"] = "analysis"
    out["sns"] = sns_payload(sns_report(G))
    return out


def theorem_payload(rep: TheoremReport) -> dict[str, Any]:
    return {
        "type": "theorem_report",
        "theorem": rep.theorem,
        "verdict": rep.verdict,
        "universe": rep.universe,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks],
        "witnesses": [{"graph6": write_graph6(w.graph),
                       "edge": list(w.edge) if w.edge else None,
                       "detail": w.detail} for w in rep.witnesses],
        "notes": list(rep.notes),
        "observations": rep.observations,
        "stats": rep.stats,
    }


def factorization_payload(rep: FactorizationReport) -> dict[str, Any]:
    return {
        "type": "factorization_report",
        "product": rep.product,
        "target": list(rep.target),
        "candidates": [{"factors": [list(f) for f in c.factors],
                        "reason": c.reason,
                        "detail": c.detail,
                        "proof_case": c.proof_case,
                        "verified": list(c.verified)} for c in rep.candidates],
        "surviving": len(rep.surviving),
        "proof_reasons": dict(sorted((k or "survived", v) for k, v in rep.proof_reasons().items())),
        "notes": list(rep.notes),
    }


def stats_payload(stats: SearchStats, timing: bool = False) -> dict[str, Any]:
    return stats.as_dict(timing=timing)


def document(command: list[str], inputs: list[str], payload: dict[str, Any],
             stats: dict[str, Any] | None = None) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": list(command),
        "inputs": list(inputs),
        "payload": payload,
        "stats": stats or {},
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("ersns.data").joinpath("report.schema.json").read_text())
