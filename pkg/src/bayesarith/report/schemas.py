"""Pydantic schemas for report records."""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel


class Verdict(str, Enum):
    """Outcome of comparing an observed value with a stated one."""

    MATCH = "match"
    MISMATCH = "mismatch"
    TYPO_SUSPECTED = "typo-suspected"
    NOT_RUN = "not-run"


class ClaimRecord(BaseModel):
    """One checked claim."""

    claim_id: str
    location: str  # where the claim is stated
    description: str
    expected: Any = None
    provenance: str = "stated"  # stated | derived | trivial
    observed: Any = None
    verdict: Verdict
    note: Optional[str] = None
    seconds: Optional[float] = None


class SweepRow(BaseModel):
    """Factoring outcome for one C, checked against trial division."""

    C: int
    status: str
    A: Optional[int] = None
    B: Optional[int] = None
    truth: Optional[str] = None  # prime | composite
    outcome: Optional[str] = None  # confusion-matrix category
    objectives_evaluated: int = 0
    lp_dims: tuple[int, int] = (0, 0)  # unknowns, equations before presolve
    reduced_dims: tuple[int, int] = (0, 0)
    presolve_fixed_count: int = 0
    pivots: int = 0
    wall_time: float = 0.0
    detail: str = ""
    presolve_trace: Optional[list[dict[str, str]]] = None  # fixings and aliases, on request


class SweepSummary(BaseModel):
    """Aggregate of a sweep."""

    lo: int
    hi: int
    mode: str
    total: int
    confusion: dict[str, int]  # "<truth>/<status>" -> count
    outcomes: dict[str, int]  # confusion-matrix category -> count
    discrepancies: int
    agreement_rate: Optional[float] = None
    primes_feasible: int = 0  # primes whose system passed phase I
    wall_time: float = 0.0
