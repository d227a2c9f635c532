"""Empirical checks of the USNS results: forbidden-family scans, local
structure lemmas, product constructions and the 99-graph case analysis."""

from .constructions import catalog, verify_cartesian_usns, verify_shadow_theorems, verify_tensor_usns
from .conway import (
    CitedFact,
    FactorizationReport,
    conway_cartesian_report,
    conway_tensor_report,
    load_cited_facts,
)
from .forbidden import Family, scan_forbidden_usns
from .report import PreconditionError, TheoremReport
from .structural import (
    EdgeContext,
    check_p3h_property,
    check_p_lambda_endpoints,
    edge_context,
    scan_structural,
)

__all__ = [
    "CitedFact", "EdgeContext", "FactorizationReport", "Family", "PreconditionError",
    "TheoremReport", "catalog", "check_p3h_property", "check_p_lambda_endpoints",
    "conway_cartesian_report", "conway_tensor_report", "edge_context", "load_cited_facts",
    "scan_forbidden_usns", "scan_structural", "verify_cartesian_usns",
    "verify_shadow_theorems", "verify_tensor_usns",
]
