"""Sparsity statistics of an LP system."""

from collections import Counter
from dataclasses import dataclass, field

from bayesarith.core.models import ConstraintKind
from bayesarith.core.system import LpSystem


@dataclass
class SystemStats:
    rows: int = 0
    cols: int = 0
    nnz: int = 0
    max_row_nnz: int = 0
    max_col_nnz: int = 0
    by_kind: dict[str, int] = field(default_factory=dict)
    max_row_nnz_by_kind: dict[str, int] = field(default_factory=dict)

    @property
    def avg_row_nnz(self) -> float:
        return self.nnz / self.rows if self.rows else 0.0

    def as_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "nnz": self.nnz,
            "max_row_nnz": self.max_row_nnz,
            "avg_row_nnz": round(self.avg_row_nnz, 4),
            "max_col_nnz": self.max_col_nnz,
            "by_kind": dict(self.by_kind),
            "max_row_nnz_by_kind": dict(self.max_row_nnz_by_kind),
        }


def system_stats(lp: LpSystem) -> SystemStats:
    stats = SystemStats(rows=lp.n_equations, cols=lp.n_unknowns)
    column_use: Counter = Counter()
    for constraint in lp.constraints:
        size = constraint.nnz
        kind = constraint.kind.value
        stats.nnz += size
        stats.max_row_nnz = max(stats.max_row_nnz, size)
        stats.by_kind[kind] = stats.by_kind.get(kind, 0) + 1
        stats.max_row_nnz_by_kind[kind] = max(stats.max_row_nnz_by_kind.get(kind, 0), size)
        column_use.update(constraint.requirements)
    stats.max_col_nnz = max(column_use.values(), default=0)
    for kind in ConstraintKind:
        stats.by_kind.setdefault(kind.value, 0)
    return stats
