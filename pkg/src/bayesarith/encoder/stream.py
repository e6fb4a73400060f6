"""Write a factoring system straight to disk in the native text format.

The unknown table is numbered arithmetically and rows are formatted as they
are generated, so no constraint list or requirement objects are held in
memory. This is the path for the 768-bit and larger instances.
"""

import logging
import time
from dataclasses import dataclass
from pathlib import Path

from bayesarith.core.system import SystemCounts
from bayesarith.encoder.builder import bit_fixings
from bayesarith.encoder.gates import gate_positives, gate_rows, structural_rows
from bayesarith.encoder.multiplication import FactoringSpec, multiplication_gates
from bayesarith.encoder.table import UnknownTable
from bayesarith.encoder.universal import universal_count, universal_rows
from bayesarith.parser.lp_format import format_header, format_row

logger = logging.getLogger("bayesarith")


@dataclass
class StreamResult:
    path: Path
    counts: SystemCounts
    nnz: int
    max_row_nnz: int
    seconds: float
    bytes_written: int


def stream_factoring_system(value: int, path: Path) -> StreamResult:
    """Encode the factoring system of C = value into ``path``."""
    started = time.perf_counter()
    spec = FactoringSpec(value)
    env = spec.env
    gates = multiplication_gates(spec.n, spec.m)
    table = UnknownTable(env.variable_count, (p for g in gates for p in gate_positives(g)))
    fixings = bit_fixings(env.variable_count, spec.data())
    structural = sum(len(gate_rows(g)) for g in gates)
    universal = sum(universal_count(len(p)) for p in table.positives())
    counts = SystemCounts(
        unknowns=table.size,
        positive=table.positive_count,
        data=len(fixings),
        structural=structural,
        universal=universal,
    )
    logger.info(
        f"Streaming C of {spec.c} bits (n={spec.n}, m={spec.m}): "
        f"{counts.unknowns} unknowns, {counts.equations} equations -> {path}"
    )

    nnz = 0
    max_row = 0
    written = 0
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:

        def emit(terms, rhs) -> None:
            nonlocal nnz, max_row, written
            line = format_row(((table.column(lits), coef) for lits, coef in terms), rhs) + "\n"
            nnz += len(terms)
            max_row = max(max_row, len(terms))
            written += fh.write(line)

        written += fh.write(format_header(counts.unknowns, counts.equations) + "\n")
        for index, bit in fixings:
            literal = -index if bit else index
            emit((((literal,), 1),), 0)
        for _, (terms, rhs) in structural_rows(gates):
            emit(terms, rhs)
        for positive in table.positives():
            for terms, rhs in universal_rows(positive):
                emit(terms, rhs)

    seconds = time.perf_counter() - started
    logger.info(f"Wrote {written} characters, {nnz} nonzeros in {seconds:.1f}s")
    return StreamResult(path, counts, nnz, max_row, seconds, written)
