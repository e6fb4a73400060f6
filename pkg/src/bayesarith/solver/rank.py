"""Exact rank and unique solutions by rational Gaussian elimination."""

import logging
from fractions import Fraction
from typing import Optional

from bayesarith.solver.sparse import SparseMatrixSystem

logger = logging.getLogger("bayesarith")

DEFAULT_DENSE_THRESHOLD = 2000


def _dense_rank(system: SparseMatrixSystem) -> int:
    matrix = [[Fraction(0)] * system.n_cols for _ in system.rows]
    for r, row in enumerate(system.rows):
        for col, coef in row:
            matrix[r][col] = coef
    rank = 0
    n_rows = len(matrix)
    for col in range(system.n_cols):
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank]
        for r in range(rank + 1, n_rows):
            factor = matrix[r][col]
            if factor == 0:
                continue
            factor /= lead[col]
            target = matrix[r]
            for c in range(col, system.n_cols):
                if lead[c] != 0:
                    target[c] -= factor * lead[c]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _sparse_rank(system: SparseMatrixSystem) -> int:
    """Elimination on dict rows, pivoting on short rows and short columns."""
    rows: dict[int, dict[int, Fraction]] = {
        r: dict(row) for r, row in enumerate(system.rows) if row
    }
    columns: dict[int, set[int]] = {}
    for r, row in rows.items():
        for col in row:
            columns.setdefault(col, set()).add(r)

    rank = 0
    while rows:
        r = min(rows, key=lambda key: (len(rows[key]), key))
        pivot_row = rows.pop(r)
        for col in pivot_row:
            columns[col].discard(r)
        col = min(pivot_row, key=lambda c: (len(columns[c]), c))
        lead = pivot_row[col]
        for other in list(columns[col]):
            target = rows[other]
            factor = target[col] / lead
            for c, v in pivot_row.items():
                updated = target.get(c, Fraction(0)) - factor * v
                if updated == 0:
                    if c in target:
                        del target[c]
                        columns[c].discard(other)
                else:
                    if c not in target:
                        columns.setdefault(c, set()).add(other)
                    target[c] = updated
            if not target:
                del rows[other]
        rank += 1
    return rank


def rank(system: SparseMatrixSystem, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> int:
    """Rank of the coefficient matrix over the rationals."""
    if not system.rows or system.n_cols == 0:
        return 0
    if system.n_cols < dense_threshold:
        return _dense_rank(system)
    logger.debug(f"Sparse rank on {system.n_rows}x{system.n_cols}")
    return _sparse_rank(system)


def unique_solution(system: SparseMatrixSystem) -> Optional[tuple[Fraction, ...]]:
    """The single solution of A x = b ignoring x >= 0, or None.

    None when the system is inconsistent or A lacks full column rank.
    """
    n = system.n_cols
    matrix = []
    for row, rhs in zip(system.rows, system.rhs):
        dense = [Fraction(0)] * (n + 1)
        for col, coef in row:
            dense[col] = coef
        dense[n] = rhs
        matrix.append(dense)

    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [v / lead for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(col)
        r += 1

    if any(all(v == 0 for v in row[:n]) and row[n] != 0 for row in matrix):
        return None
    if len(pivot_cols) < n:
        return None
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        solution[col] = matrix[i][n]
    return tuple(solution)
