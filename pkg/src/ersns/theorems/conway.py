"""Case analysis ruling out product constructions of an SR(99,14,1,2) graph.

Such a graph lies in ER(99,14,1) = RCA(99,14,3).  Each report lists every
candidate factor-parameter pair with the first elimination rule that fires.
Rules are arithmetic predicates, curated nonexistence facts (loaded from a
JSON file, never recomputed) or exhaustive enumeration for ``n <= 12``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..enumerate import DEFAULT_MAX_N, EnumSpec, enumerate_er

PARITY = "parity"
N_LE_D = "n<=d"
COMPLETE_LAMBDA = "complete-lambda"
DIV3 = "3-nmid-nd"
DIV_K1 = "k-1-nmid-d"
D_LE_LAMBDA = "d<=lambda"
CITED = "cited-fact"
COMPUTED = "computed-empty"

TARGET = (99, 14, 1)
CLIQUE = 3  # omega of an ER(n, d, 1) graph with edges


@dataclass(frozen=True)
class CitedFact:
    params: tuple[int, int, int]
    statement: str
    citation: str


def load_cited_facts(path: str | Path | None = None) -> dict[tuple[int, int, int], CitedFact]:
    if path is None:
        text = resources.files("ersns.data").joinpath("cited_facts.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    facts = {}
    for item in data["facts"]:
        p = tuple(item["params"])
        facts[p] = CitedFact(p, item["statement"], item["citation"])
    return facts


@dataclass
class Candidate:
    factors: tuple[tuple[int | None, int, int], tuple[int | None, int, int]]
    reason: str | None
    detail: str
    proof_case: bool
    verified: list[str] = field(default_factory=list)

    @property
    def survived(self) -> bool:
        return self.reason is None


@dataclass
class FactorizationReport:
    product: str
    target: tuple[int, int, int]
    candidates: list[Candidate]
    notes: list[str] = field(default_factory=list)

    @property
    def surviving(self) -> list[Candidate]:
        return [c for c in self.candidates if c.survived]

    def proof_reasons(self) -> Counter:
        return Counter(c.reason for c in self.candidates if c.proof_case)


class _Rules:
    """Ordered elimination predicates applied factor by factor."""

    def __init__(self, facts, compute_limit=DEFAULT_MAX_N):
        self.facts = facts
        self.compute_limit = compute_limit
        self._enum_cache = {}

    def enum(self, n, d, lam):
        key = (n, d, lam)
        if key not in self._enum_cache:
            self._enum_cache[key] = enumerate_er(EnumSpec(n, d, lam))
        return self._enum_cache[key]

    def parity(self, n, d, lam):
        if d % (CLIQUE - 1):
            return f"{CLIQUE - 1} does not divide d={d}"

    def div_k1(self, n, d, lam):
        if lam == 1 and d % (CLIQUE - 1):
            return f"k-1 = {CLIQUE - 1} does not divide {d}"

    def handshake(self, n, d, lam):
        if n is not None and n * d % 2:
            return f"n*d = {n * d} is odd"

    def d_le_lambda(self, n, d, lam):
        if d <= lam:
            return f"d={d} <= lambda={lam}"

    def n_le_d(self, n, d, lam):
        if n is not None and n <= d:
            return f"n={n} <= d={d}"

    def complete_lambda(self, n, d, lam):
        if n is not None and n == d + 1 and n - 2 != lam:
            return f"n = d + 1 forces K_{n}, whose lambda is {n - 2} != {lam}"

    def div3(self, n, d, lam):
        if n is not None and lam == 1 and n * d % 3:
            return f"3 does not divide nd = {n * d}"

    def cited(self, n, d, lam):
        if n is None or n <= self.compute_limit:
            return None
        fact = self.facts.get((n, d, lam))
        if fact:
            return f"{fact.statement} ({fact.citation})"

    def computed(self, n, d, lam):
        if n is not None and n <= self.compute_limit and not len(self.enum(n, d, lam)):
            return f"ER({n},{d},{lam}) enumerated empty"

    def verify(self, n, d, lam):
        """Computational confirmation attached to predicate-based eliminations."""
        if n is None or n > self.compute_limit or n <= d or d <= lam:
            return None
        found = len(self.enum(n, d, lam))
        return f"enumerated |ER({n},{d},{lam})| = {found}"


def _eliminate(rules, chain, factors):
    for code, pred in chain:
        for f in factors:
            why = pred(*f)
            if why:
                return code, why
    return None, "no rule applies"


def conway_cartesian_report(facts=None) -> FactorizationReport:
    """Cartesian factorizations G1 □ G2 with G_i in RCA(n_i, d_i, 3)."""
    facts = load_cited_facts() if facts is None else facts
    rules = _Rules(facts)
    chain = [
        (PARITY, rules.parity),
        (D_LE_LAMBDA, rules.d_le_lambda),
        (N_LE_D, rules.n_le_d),
        (COMPLETE_LAMBDA, rules.complete_lambda),
        (DIV3, rules.div3),
        (CITED, rules.cited),
        (COMPUTED, rules.computed),
    ]
    n, d, lam = TARGET
    candidates = []
    for n1 in range(2, n):
        n2, r = divmod(n, n1)
        if r or n2 <= 1 or n1 > n2:
            continue
        for d1 in range(d + 1):
            d2 = d - d1
            factors = ((n1, d1, lam), (n2, d2, lam))
            reason, detail = _eliminate(rules, chain, factors)
            proof_case = d1 % 2 == 0 and d2 % 2 == 0 and 0 < d1 < n1
            cand = Candidate(factors, reason, detail, proof_case)
            if proof_case:
                for f in factors:
                    v = rules.verify(*f)
                    if v:
                        cand.verified.append(v)
            candidates.append(cand)
    notes = ["factor pairs {n1, n2} with n1 * n2 = 99 and d1 + d2 = 14; lambda = 1 in both"]
    return FactorizationReport("cartesian", TARGET, candidates, notes)


def conway_tensor_report(facts=None) -> FactorizationReport:
    """Tensor factorizations with n1 n2 = 99, d1 d2 = 14, lambda1 lambda2 = 1."""
    facts = load_cited_facts() if facts is None else facts
    rules = _Rules(facts)
    chain = [
        (D_LE_LAMBDA, rules.d_le_lambda),
        (DIV_K1, rules.div_k1),
        (N_LE_D, rules.n_le_d),
        (PARITY, rules.handshake),
        (COMPLETE_LAMBDA, rules.complete_lambda),
        (DIV3, rules.div3),
        (CITED, rules.cited),
        (COMPUTED, rules.computed),
    ]
    n, d, lam = TARGET
    candidates = []
    for d1 in range(1, d + 1):
        d2, r = divmod(d, d1)
        if r or d1 > d2:
            continue
        if d1 == 2:
            # lambda = 1 and d = 2: a connected factor is K_3
            factors = ((3, d1, 1), (n // 3, d2, 1))
            detail_extra = "; the predicate depends only on d2, so it holds for every n2"
        else:
            factors = ((None, d1, 1), (None, d2, 1))
            detail_extra = ""
        reason, detail = _eliminate(rules, chain, factors)
        cand = Candidate(factors, reason, detail + (detail_extra if reason == DIV_K1 else ""), True)
        if d1 == 2:
            k3 = rules.enum(3, 2, 1)
            cand.verified.append(f"enumerated |ER(3,2,1)| = {len(k3)} (K_3)")
        candidates.append(cand)
    notes = ["lambda1 * lambda2 = 1 forces lambda1 = lambda2 = 1"]
    return FactorizationReport("tensor", TARGET, candidates, notes)
