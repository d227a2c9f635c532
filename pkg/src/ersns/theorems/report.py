from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..graph import Graph


class PreconditionError(ValueError):
    """A checker was handed a graph outside its hypotheses."""


CONFIRMED = "confirmed"
COUNTEREXAMPLE = "counterexample"
VACUOUS = "vacuous"
NOT_APPLICABLE = "not_applicable"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    graph: Graph
    edge: tuple[int, int] | None
    detail: str


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class TheoremReport:
    theorem: str
    universe: dict[str, Any]
    verdict: str
    witnesses: list[Witness] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    observations: dict[str, Any] = field(default_factory=dict)
    stats: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == COUNTEREXAMPLE and not self.witnesses:
            raise ValueError("a counterexample verdict needs at least one witness")

    @property
    def ok(self) -> bool:
        return self.verdict != COUNTEREXAMPLE


def verdict_from_checks(checks: list[Check]) -> str:
    return CONFIRMED if all(c.passed for c in checks) else COUNTEREXAMPLE
