"""Sparse row storage of A x = b, x >= 0 with exact rational coefficients."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np
from scipy import sparse

from bayesarith.core.system import LpSystem

SparseRow = tuple[tuple[int, Fraction], ...]
RowInput = Union[Mapping[int, object], Iterable[tuple[int, object]]]


def merge_terms(terms: Iterable[tuple[int, object]]) -> SparseRow:
    """Combine repeated columns and drop zeros, keeping first-seen column order."""
    merged: dict[int, Fraction] = {}
    for col, coef in terms:
        merged[col] = merged.get(col, Fraction(0)) + Fraction(coef)
    return tuple((col, coef) for col, coef in merged.items() if coef != 0)


@dataclass(frozen=True)
class SparseMatrixSystem:
    """Rows of (column, coefficient) pairs with right-hand sides.

    Every column is bounded below by zero. No stored coefficient is zero.
    ``names`` optionally labels the columns (requirement display forms).
    """

    n_cols: int
    rows: tuple[SparseRow, ...]
    rhs: tuple[Fraction, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.rhs):
            raise ValueError(f"{len(self.rows)} rows but {len(self.rhs)} right-hand sides")
        if self.names and len(self.names) != self.n_cols:
            raise ValueError(f"{len(self.names)} names for {self.n_cols} columns")
        for row in self.rows:
            for col, coef in row:
                if not 0 <= col < self.n_cols:
                    raise ValueError(f"column {col} outside 0..{self.n_cols - 1}")
                if coef == 0:
                    raise ValueError("stored coefficient is zero")

    @classmethod
    def from_rows(
        cls,
        n_cols: int,
        rows: Iterable[tuple[RowInput, object]],
        names: Sequence[str] = (),
    ) -> "SparseMatrixSystem":
        packed_rows = []
        packed_rhs = []
        for terms, rhs in rows:
            items = terms.items() if isinstance(terms, Mapping) else terms
            packed_rows.append(merge_terms(items))
            packed_rhs.append(Fraction(rhs))
        return cls(n_cols, tuple(packed_rows), tuple(packed_rhs), tuple(names))

    @classmethod
    def from_lp(cls, lp: LpSystem) -> "SparseMatrixSystem":
        rows = (
            (((lp.column(req), coef) for req, coef in constraint.terms), constraint.rhs)
            for constraint in lp.constraints
        )
        return cls.from_rows(lp.n_unknowns, rows, [str(req) for req in lp.unknowns])

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows)

    def name(self, col: int) -> str:
        return self.names[col] if self.names else f"x{col}"

    def residuals(self, point: Sequence[object]) -> list[Fraction]:
        """b - A x for each row, exact."""
        values = [Fraction(v) for v in point]
        return [
            rhs - sum((coef * values[col] for col, coef in row), Fraction(0))
            for row, rhs in zip(self.rows, self.rhs)
        ]

    def is_feasible_point(self, point: Sequence[object]) -> bool:
        if len(point) != self.n_cols or any(Fraction(v) < 0 for v in point):
            return False
        return all(r == 0 for r in self.residuals(point))

    def with_rows(self, rows: Iterable[tuple[RowInput, object]]) -> "SparseMatrixSystem":
        extra = SparseMatrixSystem.from_rows(self.n_cols, rows)
        return SparseMatrixSystem(
            self.n_cols, self.rows + extra.rows, self.rhs + extra.rhs, self.names
        )

    def to_scipy(self) -> tuple[sparse.csr_matrix, np.ndarray]:
        """Float copy as a CSR matrix and a right-hand-side vector."""
        data, indices, indptr = [], [], [0]
        for row in self.rows:
            for col, coef in row:
                indices.append(col)
                data.append(float(coef))
            indptr.append(len(indices))
        matrix = sparse.csr_matrix(
            (np.asarray(data, dtype=float), np.asarray(indices, dtype=np.int64), indptr),
            shape=(self.n_rows, self.n_cols),
        )
        return matrix, np.asarray([float(b) for b in self.rhs], dtype=float)
