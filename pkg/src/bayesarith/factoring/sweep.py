"""Run the factoring driver over a range of C and score it against trial division."""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from bayesarith.config.settings import Settings
from bayesarith.core.errors import RangeError, TooLarge
from bayesarith.factoring.driver import FactorStatus, factor
from bayesarith.oracle.brute_force import trial_division
from bayesarith.report.schemas import SweepRow, SweepSummary

logger = logging.getLogger("bayesarith")

COMPOSITE_FOUND = "composite-found"
COMPOSITE_MISSED = "composite-missed"
PRIME_CONFIRMED = "prime-confirmed"
PRIME_DISCREPANCY = "prime-discrepancy"
PRIME_MISFACTORED = "prime-misfactored"


@dataclass
class SweepReport:
    rows: list[SweepRow] = field(default_factory=list)
    summary: Optional[SweepSummary] = None

    @property
    def discrepancies(self) -> int:
        return self.summary.discrepancies if self.summary else 0


def outcome_of(truth_prime: bool, status: str) -> str:
    """Confusion-matrix category of one driver status against ground truth."""
    composite = status == FactorStatus.COMPOSITE.value
    if not truth_prime:
        return COMPOSITE_FOUND if composite else COMPOSITE_MISSED
    if composite:
        return PRIME_MISFACTORED
    if status == FactorStatus.DISCREPANCY.value:
        return PRIME_DISCREPANCY
    return PRIME_CONFIRMED


def sweep_row(value: int, settings: Settings) -> SweepRow:
    """Factor one C and attach ground truth. Module level so worker processes can run it."""
    row = factor(value, settings).to_record()
    truth = trial_division(value)
    if row.status == FactorStatus.COMPOSITE.value and (row.A or 0) * (row.B or 0) != value:
        raise AssertionError(f"driver returned false factors for C={value}: {row.A}x{row.B}")
    row.truth = "prime" if truth.is_prime else "composite"
    row.outcome = outcome_of(truth.is_prime, row.status)
    return row


def summarize(
    lo: int, hi: int, rows: list[SweepRow], settings: Settings, seconds: float
) -> SweepSummary:
    confusion = Counter(f"{row.truth}/{row.status}" for row in rows)
    outcomes = Counter(row.outcome for row in rows)
    discrepancies = sum(1 for row in rows if row.status == FactorStatus.DISCREPANCY.value)
    agreeing = outcomes[COMPOSITE_FOUND] + outcomes[PRIME_CONFIRMED]
    primes_feasible = sum(
        1
        for row in rows
        if row.truth == "prime" and row.status != FactorStatus.INFEASIBLE_SYSTEM.value
    )
    return SweepSummary(
        lo=lo,
        hi=hi,
        mode=settings.mode,
        total=len(rows),
        confusion=dict(sorted(confusion.items())),
        outcomes=dict(sorted(outcomes.items())),
        discrepancies=discrepancies,
        agreement_rate=round(agreeing / len(rows), 6) if rows else None,
        primes_feasible=primes_feasible,
        wall_time=round(seconds, 3),
    )


def sweep(lo: int, hi: int, settings: Optional[Settings] = None) -> SweepReport:
    """Factor every C in [lo, hi]; an empty range gives an empty report.

    Raises:
        RangeError: lo < 4
        TooLarge: hi exceeds the configured sweep limit
    """
    settings = settings or Settings()
    started = time.perf_counter()
    if hi < lo:
        return SweepReport([], summarize(lo, hi, [], settings, 0.0))
    if lo < 4:
        raise RangeError(f"sweep range must start at 4 or above, got {lo}")
    if hi > settings.sweep_limit:
        raise TooLarge("sweep upper bound", hi, settings.sweep_limit)

    values = list(range(lo, hi + 1))
    logger.info(f"Sweeping C in [{lo}, {hi}] ({len(values)} values, {settings.jobs} jobs)")
    if settings.jobs > 1 and len(values) > 1:
        with ProcessPoolExecutor(max_workers=settings.jobs) as pool:
            rows = list(pool.map(sweep_row, values, [settings] * len(values)))
    else:
        rows = [sweep_row(value, settings) for value in values]
    rows.sort(key=lambda row: row.C)

    summary = summarize(lo, hi, rows, settings, time.perf_counter() - started)
    if summary.discrepancies:
        logger.warning(f"Sweep [{lo}, {hi}]: {summary.discrepancies} discrepancies")
    logger.info(f"Sweep [{lo}, {hi}] done: outcomes {summary.outcomes}")
    return SweepReport(rows, summary)
