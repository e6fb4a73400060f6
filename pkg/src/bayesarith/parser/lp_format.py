"""Native text format and CPLEX-style LP export of sparse systems.

Native format::

    vars 12 rows 12
    # x0 = (1)
    ...
    1*0 = 0
    1*4 -1*9 -1*10 = 0

Each row lists ``coef*column`` terms and ``= rhs``; rationals are written
``p/q``. Comment lines start with ``#``; ``# x<col> = <name>`` lines carry
optional column names.
"""

import io
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Optional, TextIO

from bayesarith.core.errors import FormatError
from bayesarith.parser.patterns import HEADER_PATTERN, NAME_PATTERN, RHS_PATTERN, TERM_PATTERN
from bayesarith.solver.sparse import SparseMatrixSystem

# Objective term for the command line
# Example: x3, -2*x5, + 1/2*x7
OBJECTIVE_TERM_PATTERN = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?:(?P<num>\d+)(?:/(?P<den>\d+))?\s*\*\s*)?x(?P<col>\d+)\s*"
)


def format_number(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_row(terms: Iterable[tuple[int, object]], rhs: object) -> str:
    """One native row, e.g. ``1*4 -1*9 = 0``."""
    body = " ".join(f"{format_number(coef)}*{col}" for col, coef in terms)
    return f"{body} = {format_number(rhs)}" if body else f"= {format_number(rhs)}"


def format_header(n_cols: int, n_rows: int) -> str:
    return f"vars {n_cols} rows {n_rows}"


def write_native(system: SparseMatrixSystem, stream: TextIO) -> None:
    stream.write(format_header(system.n_cols, system.n_rows) + "\n")
    for col, name in enumerate(system.names):
        stream.write(f"# x{col} = {name}\n")
    for row, rhs in zip(system.rows, system.rhs):
        stream.write(format_row(row, rhs) + "\n")


def dumps_native(system: SparseMatrixSystem) -> str:
    buffer = io.StringIO()
    write_native(system, buffer)
    return buffer.getvalue()


def _parse_fraction(match: re.Match) -> Fraction:
    den = match.group("den")
    return Fraction(int(match.group("num")), int(den) if den else 1)


def parse_row(text: str, n_cols: int, line_number: Optional[int] = None) -> tuple[list, Fraction]:
    """Parse ``coef*col ... = rhs`` into a term list and a right-hand side."""
    if text.count("=") != 1:
        raise FormatError(f"expected exactly one '=' in {text!r}", line_number)
    left, right = text.split("=")
    rhs_match = RHS_PATTERN.match(right.strip())
    if not rhs_match:
        raise FormatError(f"bad right-hand side {right.strip()!r}", line_number)
    terms = []
    for token in left.split():
        match = TERM_PATTERN.match(token)
        if not match:
            raise FormatError(f"bad term {token!r}", line_number)
        col = int(match.group("col"))
        if col >= n_cols:
            raise FormatError(f"column {col} outside 0..{n_cols - 1}", line_number)
        terms.append((col, _parse_fraction(match)))
    return terms, _parse_fraction(rhs_match)


def loads_native(text: str) -> SparseMatrixSystem:
    """Parse the native text format.

    Raises:
        FormatError: missing or malformed header, malformed row, wrong row count
    """
    header: Optional[tuple[int, int]] = None
    names: dict[int, str] = {}
    rows = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            name_match = NAME_PATTERN.match(line)
            if name_match:
                names[int(name_match.group("col"))] = name_match.group("name")
            continue
        if header is None:
            header_match = HEADER_PATTERN.match(line)
            if not header_match:
                raise FormatError("expected header 'vars <N> rows <R>'", line_number)
            header = (int(header_match.group("vars")), int(header_match.group("rows")))
            continue
        rows.append(parse_row(line, header[0], line_number))
    if header is None:
        raise FormatError("empty input: no header")
    n_cols, n_rows = header
    if len(rows) != n_rows:
        raise FormatError(f"header announces {n_rows} rows, found {len(rows)}")
    ordered_names: tuple[str, ...] = ()
    if names:
        missing = [col for col in range(n_cols) if col not in names]
        if missing:
            raise FormatError(f"column names missing for {len(missing)} columns")
        ordered_names = tuple(names[col] for col in range(n_cols))
    return SparseMatrixSystem.from_rows(n_cols, rows, ordered_names)


def read_native(path: Path) -> SparseMatrixSystem:
    return loads_native(Path(path).read_text(encoding="utf-8"))


def parse_objective(text: str, n_cols: int) -> dict[int, Fraction]:
    """Parse an objective such as ``x3 + 2*x5 - 1/2*x7``."""
    coefficients: dict[int, Fraction] = {}
    position = 0
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty objective")
    while position < len(stripped):
        match = OBJECTIVE_TERM_PATTERN.match(stripped, position)
        if not match or match.end() == position:
            raise FormatError(f"bad objective near {stripped[position:]!r}")
        col = int(match.group("col"))
        if col >= n_cols:
            raise FormatError(f"column {col} outside 0..{n_cols - 1}")
        value = _parse_fraction(match) if match.group("num") else Fraction(1)
        if match.group("sign") == "-":
            value = -value
        coefficients[col] = coefficients.get(col, Fraction(0)) + value
        position = match.end()
    return coefficients


def _lp_number(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return repr(float(value))


def _lp_expression(terms: Iterable[tuple[int, object]]) -> str:
    parts = []
    for col, coef in terms:
        coef = Fraction(coef)
        sign = "-" if coef < 0 else "+"
        parts.append(f"{sign} {_lp_number(abs(coef))} x{col}")
    if not parts:
        return "0 x0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def write_lp(
    system: SparseMatrixSystem,
    stream: TextIO,
    objective: Optional[Mapping[int, object]] = None,
    maximize: bool = True,
) -> None:
    """CPLEX LP text; columns are named ``x<col>`` and default to x >= 0."""
    stream.write("\\ bayesarith export\n")
    stream.write("Maximize\n" if maximize else "Minimize\n")
    stream.write(f" obj: {_lp_expression(sorted((objective or {}).items()))}\n")
    stream.write("Subject To\n")
    for i, (row, rhs) in enumerate(zip(system.rows, system.rhs)):
        stream.write(f" r{i}: {_lp_expression(row)} = {_lp_number(rhs)}\n")
    stream.write("End\n")


def export(
    system: SparseMatrixSystem,
    fmt: str = "native",
    objective: Optional[Mapping[int, object]] = None,
) -> bytes:
    """Serialize a system as ``native`` text or ``lp`` (CPLEX LP) text."""
    if fmt == "native":
        return dumps_native(system).encode("utf-8")
    if fmt == "lp":
        buffer = io.StringIO()
        write_lp(system, buffer, objective)
        return buffer.getvalue().encode("utf-8")
    raise ValueError(f"unknown export format: {fmt}")
