import json
from typing import Dict, List, Optional, Tuple

from pydantic import Field, conint, validator
from typing_extensions import Annotated

from oblivagg.data_models.base import BaseModel
from oblivagg.data_models.enum import VerdictEnum
from oblivagg.data_models.messages import SurvivorSet
from oblivagg.data_models.session import SessionParams

DEFAULT_BUDGET = 2**26


class AuditConfig(BaseModel):
    """Settings of an exhaustive audit.

    Attributes:
        budget (int): maximal number of enumerated states q^(2KL). Defaults to 2**26.
        n_procs (int): number of worker processes for the enumeration. Defaults to 1.
        chunk_size (int): states per enumeration chunk. Defaults to 2**16.
        survivor_sets (List[SurvivorSet], optional): survivor sets to audit user security for.
            Defaults to [K] for the no-dropout scheme and every nonempty subset otherwise.
        users (List[int], optional): restrict user-security checks to these users.
        colluder_sets (List[Tuple[int, ...]]): coalitions for the collusion checks.
        progress (bool): show a progress bar over chunks.
    """

    budget: conint(ge=1) = DEFAULT_BUDGET  # type: ignore
    n_procs: conint(ge=1) = 1  # type: ignore
    chunk_size: conint(ge=1) = 2**16  # type: ignore
    survivor_sets: Optional[List[SurvivorSet]] = None
    users: Optional[List[int]] = None
    colluder_sets: List[Tuple[int, ...]] = []
    progress: bool = False


class CounterExample(BaseModel):
    """Concrete census cell violating a constraint.

    Attributes:
        cell (Dict[str, List[int]]): value of every observable in the violating cell.
        lhs (int): first of the two mismatching counts.
        rhs (int): second of the two mismatching counts.
    """

    cell: Dict[str, List[int]]
    lhs: int
    rhs: int


class AuditEntry(BaseModel):
    """Exact verdict on a single constraint.

    Attributes:
        name (str): constraint name, e.g. `server-security`.
        anchor (str): the constraint in words.
        verdict (VerdictEnum): PASS, PASS_DEGENERATE or FAIL.
        cells_examined (int): number of conditioning cells inspected.
        counterexample (CounterExample, optional): violating cell, only for FAIL.
        detail (str): free text, e.g. the observed support size.
    """

    name: str
    anchor: str
    verdict: VerdictEnum
    cells_examined: conint(ge=0)  # type: ignore
    counterexample: Optional[CounterExample] = None
    detail: str = ""

    @validator("counterexample", always=True)
    def validate_counterexample(cls, counterexample, values):
        if values.get("verdict") == VerdictEnum.FAIL and counterexample is None:
            raise ValueError("a failing entry needs a counterexample")
        return counterexample

    @property
    def passed(self) -> bool:
        return self.verdict != VerdictEnum.FAIL

    def to_text(self) -> str:
        line = f"{self.verdict.value:<16} {self.name:<40} {self.anchor} [cells={self.cells_examined}]"
        if self.detail:
            line += f" {self.detail}"
        if self.counterexample is not None:
            ce = self.counterexample
            line += f"\n{'':<17}counterexample {json.dumps(ce.cell, sort_keys=True)}: {ce.lhs} != {ce.rhs}"
        return line


class AuditReport(BaseModel):
    """All audit entries of a session configuration.

    Attributes:
        params (SessionParams): the audited parameters.
        entries (List[AuditEntry]): one entry per constraint.
    """

    params: SessionParams
    entries: Annotated[List[AuditEntry], Field(default_factory=list)]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> List[AuditEntry]:
        return [e for e in self.entries if not e.passed]

    def to_text(self) -> str:
        p = self.params
        header = (
            f"audit scheme={p.scheme.value} K={p.n_users} q={p.q} L={p.length} "
            f"states={p.n_states}"
        )
        return "\n".join([header] + [e.to_text() for e in self.entries]) + "\n"

    def to_records(self) -> List[dict]:
        """One machine-readable record per constraint."""
        return [
            {
                "name": e.name,
                "anchor": e.anchor,
                "verdict": e.verdict.value,
                "cells_examined": e.cells_examined,
                "counterexample": None
                if e.counterexample is None
                else e.counterexample.dict(),
            }
            for e in self.entries
        ]
