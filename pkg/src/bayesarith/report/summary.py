"""JSON Lines output and fixed-width tables for claim and sweep reports."""

from collections import Counter
from pathlib import Path
from typing import Iterable, TextIO, Union

from pydantic import BaseModel

from bayesarith.report.schemas import ClaimRecord, SweepRow, SweepSummary, Verdict


def write_jsonl(records: Iterable[BaseModel], stream: TextIO) -> int:
    """One JSON object per line; returns the number of records written."""
    count = 0
    for record in records:
        stream.write(record.model_dump_json() + "\n")
        count += 1
    return count


def save_jsonl(records: Iterable[BaseModel], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        write_jsonl(records, fh)
    return path


def _clip(value: object, width: int) -> str:
    text = "" if value is None else str(value)
    return text if len(text) <= width else text[: width - 1] + "~"


def claims_table(records: list[ClaimRecord]) -> str:
    """Fixed-width table of claim records followed by a verdict tally."""
    header = f"{'claim':<32} {'verdict':<22} {'expected':<24} {'observed':<24}"
    lines = [header, "-" * len(header)]
    for record in records:
        lines.append(
            f"{_clip(record.claim_id, 32):<32} {record.verdict.value:<22} "
            f"{_clip(record.expected, 24):<24} {_clip(record.observed, 24):<24}"
        )
    tally = Counter(record.verdict for record in records)
    lines.append("")
    lines.append(", ".join(f"{tally[v]} {v.value}" for v in Verdict))
    return "\n".join(lines)


def sweep_table(rows: list[SweepRow], summary: SweepSummary) -> str:
    header = f"{'C':>6} {'truth':<10} {'status':<20} {'A':>6} {'B':>6} {'obj':>4} {'time':>8}"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.C:>6} {row.truth or '':<10} {row.status:<20} "
            f"{'' if row.A is None else row.A:>6} {'' if row.B is None else row.B:>6} "
            f"{row.objectives_evaluated:>4} {row.wall_time:>8.3f}"
        )
    lines.append("")
    lines.append(
        f"Range [{summary.lo}, {summary.hi}] in {summary.mode} mode: {summary.total} values"
    )
    for outcome, count in summary.outcomes.items():
        lines.append(f"  {outcome:<20} {count}")
    if summary.agreement_rate is not None:
        lines.append(f"  agreement rate       {summary.agreement_rate:.4f}")
    lines.append(f"  discrepancies        {summary.discrepancies}")
    return "\n".join(lines)


def has_mismatch(records: Iterable[ClaimRecord]) -> bool:
    return any(record.verdict is Verdict.MISMATCH for record in records)
