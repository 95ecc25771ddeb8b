from enum import Enum
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from samuel.constants import SAMUEL_REPORT_SCHEMA
from samuel.utils.hash import to_uuid
from samuel.utils.json import dumps_canonical, loads_no_dup


class Verdict(str, Enum):
    VERIFIED = "VERIFIED"
    FAILURE = "FAILURE"
    SKIPPED = "SKIPPED"
    VACUOUS = "VACUOUS"


class HypothesisStatus(str, Enum):
    """How strongly the hypotheses of a claim were established, strongest
    first; ``unmet`` means a hypothesis is known to fail
    """

    CERTIFIED = "certified"
    WINDOW_CERTIFIED = "window-certified"
    DECLARED = "declared"
    UNMET = "unmet"


_STRENGTH = list(HypothesisStatus)


def weakest(*statuses: HypothesisStatus) -> HypothesisStatus:
    """The weakest of ``statuses``, ``certified`` when empty"""
    return max(statuses, key=_STRENGTH.index, default=HypothesisStatus.CERTIFIED)


class _Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SAMUEL_REPORT_SCHEMA, alias="schema")

    def to_json(self) -> str:
        """Deterministic json text, ``schema`` first"""
        return dumps_canonical(self.model_dump(mode="json", by_alias=True))

    @classmethod
    def from_json(cls, text: str) -> Any:
        return cls.model_validate(loads_no_dup(text))

    def __uuid__(self) -> str:
        return to_uuid(self.model_dump(mode="json", by_alias=True))


class ClaimRecord(BaseModel):
    claim: str
    hypotheses: HypothesisStatus
    verdict: Verdict
    values: Dict[str, Any] = {}
    note: str = ""


class TheoremReport(_Document):
    """Claim records of one instance, in evaluation order"""

    instance: str
    claims: List[ClaimRecord] = []

    def add(
        self,
        claim: str,
        hypotheses: HypothesisStatus,
        verdict: Verdict,
        note: str = "",
        **values: Any,
    ) -> ClaimRecord:
        record = ClaimRecord(
            claim=claim,
            hypotheses=hypotheses,
            verdict=verdict,
            values=values,
            note=note,
        )
        self.claims.append(record)
        return record

    def extend(self, other: "TheoremReport") -> "TheoremReport":
        self.claims.extend(other.claims)
        return self

    def count(self, verdict: Verdict) -> int:
        return sum(1 for c in self.claims if c.verdict == verdict)

    @property
    def has_failure(self) -> bool:
        return self.count(Verdict.FAILURE) > 0

    def __getitem__(self, claim: str) -> ClaimRecord:
        for c in self.claims:
            if c.claim == claim:
                return c
        raise KeyError(claim)


class VVDepthRecord(BaseModel):
    k: int
    n_max: int
    reduction_reached: bool


class HilbertReport(_Document):
    ring: str
    ideal: str
    d: int
    table: List[int]
    e: List[int]
    eta: int
    vv_depth: Optional[VVDepthRecord] = None
    series: Optional[str] = None


class InstanceReport(_Document):
    """Everything computed for one corpus instance; ``error`` holds
    ``ErrorName: message`` when the pipeline stopped
    """

    name: str
    hilbert: Optional[HilbertReport] = None
    theorem: Optional[TheoremReport] = None
    error: Optional[str] = None

    @property
    def has_failure(self) -> bool:
        return self.theorem is not None and self.theorem.has_failure


class AggregateReport(_Document):
    instances: List[InstanceReport] = []
    counts: Dict[str, int] = {}

    @staticmethod
    def build(instances: List[InstanceReport]) -> "AggregateReport":
        """Aggregate ordered by instance name, with verdict and error counts"""
        items = sorted(instances, key=lambda x: x.name)
        counts = {v.value: 0 for v in Verdict}
        counts["errors"] = 0
        for item in items:
            if item.error is not None:
                counts["errors"] += 1
            if item.theorem is not None:
                for v in Verdict:
                    counts[v.value] += item.theorem.count(v)
        return AggregateReport(instances=items, counts=counts)

    @property
    def failures(self) -> int:
        return self.counts.get(Verdict.FAILURE.value, 0)

    @property
    def errors(self) -> int:
        return self.counts.get("errors", 0)

    def to_frame(self) -> pd.DataFrame:
        """One row per claim, instances without claims keep one row with the
        error
        """
        rows: List[Dict[str, Any]] = []
        for item in self.instances:
            claims = [] if item.theorem is None else item.theorem.claims
            if len(claims) == 0:
                rows.append(
                    dict(
                        instance=item.name,
                        claim=None,
                        hypotheses=None,
                        verdict=None,
                        error=item.error,
                    )
                )
            for c in claims:
                rows.append(
                    dict(
                        instance=item.name,
                        claim=c.claim,
                        hypotheses=c.hypotheses.value,
                        verdict=c.verdict.value,
                        error=item.error,
                    )
                )
        return pd.DataFrame(
            rows, columns=["instance", "claim", "hypotheses", "verdict", "error"]
        )
