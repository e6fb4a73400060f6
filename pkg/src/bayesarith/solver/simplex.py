"""Two-phase primal simplex over exact rationals on a sparse tableau.

Tableau rows are dicts {column: Fraction}. Phase I adds one artificial
column per row (columns n..n+rows-1) and minimizes their sum. The objective
row stores reduced costs and ``-z`` as its right-hand side.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from bayesarith.core.errors import EncodingAnomaly
from bayesarith.solver.sparse import SparseMatrixSystem

logger = logging.getLogger("bayesarith")

Number = Union[int, float, Fraction]


class Pricing(Enum):
    """Entering-column rule."""

    BLAND = "bland"  # lowest index with negative reduced cost; never cycles
    DANTZIG = "dantzig"  # most negative reduced cost, ties to lowest index


class LpStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpOutcome:
    """Result of a feasibility check or an optimization.

    ``point`` is set when feasible, ``certificate`` (one multiplier per
    original row) when infeasible, ``objective`` after an optimization.
    """

    status: LpStatus
    point: Optional[tuple[Number, ...]] = None
    objective: Optional[Number] = None
    certificate: Optional[tuple[Number, ...]] = None
    basis: tuple[int, ...] = ()
    pivots: int = 0
    exact: bool = True

    @property
    def is_feasible(self) -> bool:
        return self.status is LpStatus.FEASIBLE


def _axpy(target: dict[int, Fraction], source: Mapping[int, Fraction], factor: Fraction) -> None:
    """target += factor * source, dropping entries that cancel."""
    for col, value in source.items():
        updated = target.get(col, 0) + factor * value
        if updated:
            target[col] = updated
        else:
            target.pop(col, None)


def verify_certificate(system: SparseMatrixSystem, certificate: Sequence[Number]) -> bool:
    """Independent Farkas check: y^T A <= 0 on every column and y^T b > 0."""
    if len(certificate) != system.n_rows:
        return False
    y = [Fraction(v) for v in certificate]
    column_sums: dict[int, Fraction] = {}
    for weight, row in zip(y, system.rows):
        if weight == 0:
            continue
        for col, coef in row:
            column_sums[col] = column_sums.get(col, Fraction(0)) + weight * coef
    if any(total > 0 for total in column_sums.values()):
        return False
    return sum((w * b for w, b in zip(y, system.rhs)), Fraction(0)) > 0


class LpSolver:
    """Exact simplex owning one working tableau.

    Phase I runs once, lazily. Each later ``maximize`` call starts from the
    basis the previous call ended in.
    """

    def __init__(self, system: SparseMatrixSystem, pricing: Union[Pricing, str] = Pricing.BLAND):
        self.system = system
        self.pricing = Pricing(pricing)
        self.pivots = 0
        self._n = system.n_cols
        self._rows: list[dict[int, Fraction]] = []
        self._rhs: list[Fraction] = []
        self._basis: list[int] = []
        self._obj: dict[int, Fraction] = {}
        self._obj_rhs = Fraction(0)
        self._status: Optional[LpStatus] = None
        self._certificate: Optional[tuple[Fraction, ...]] = None

    # -- tableau mechanics -------------------------------------------------

    def _pivot(self, r: int, col: int) -> None:
        row = self._rows[r]
        lead = row[col]
        if lead != 1:
            inverse = 1 / lead
            row = {c: v * inverse for c, v in row.items()}
            self._rows[r] = row
            self._rhs[r] *= inverse
        rhs_r = self._rhs[r]
        for i, other in enumerate(self._rows):
            if i == r:
                continue
            factor = other.get(col)
            if factor:
                _axpy(other, row, -factor)
                self._rhs[i] -= factor * rhs_r
        factor = self._obj.get(col)
        if factor:
            _axpy(self._obj, row, -factor)
            self._obj_rhs -= factor * rhs_r
        self._basis[r] = col
        self.pivots += 1

    def _entering(self, limit: int) -> Optional[int]:
        candidates = [(v, c) for c, v in self._obj.items() if v < 0 and c < limit]
        if not candidates:
            return None
        if self.pricing is Pricing.BLAND:
            return min(c for _, c in candidates)
        return min(candidates)[1]

    def _leaving(self, col: int) -> Optional[int]:
        best: Optional[tuple[Fraction, int, int]] = None
        for i, row in enumerate(self._rows):
            coef = row.get(col)
            if coef is not None and coef > 0:
                key = (self._rhs[i] / coef, self._basis[i], i)
                if best is None or key < best:
                    best = key
        return None if best is None else best[2]

    def _iterate(self, limit: int) -> LpStatus:
        while True:
            col = self._entering(limit)
            if col is None:
                return LpStatus.FEASIBLE
            r = self._leaving(col)
            if r is None:
                return LpStatus.UNBOUNDED
            self._pivot(r, col)

    # -- phases -------------------------------------------------------------

    def _phase_one(self) -> None:
        n = self._n
        signs = []
        for i, (row, b) in enumerate(zip(self.system.rows, self.system.rhs)):
            sign = -1 if b < 0 else 1
            tableau_row = {col: sign * coef for col, coef in row}
            tableau_row[n + i] = Fraction(1)
            self._rows.append(tableau_row)
            self._rhs.append(sign * b)
            self._basis.append(n + i)
            signs.append(sign)
            _axpy(self._obj, {col: v for col, v in tableau_row.items() if col < n}, Fraction(-1))
            self._obj_rhs -= sign * b

        self._iterate(n + len(self._rows))
        infeasibility = -self._obj_rhs
        if infeasibility > 0:
            self._status = LpStatus.INFEASIBLE
            self._certificate = tuple(
                sign * (1 - self._obj.get(n + i, Fraction(0))) for i, sign in enumerate(signs)
            )
            logger.debug(f"Phase I infeasible, residual {infeasibility}, {self.pivots} pivots")
            return

        self._drive_out_artificials()
        self._status = LpStatus.FEASIBLE
        logger.debug(f"Phase I feasible after {self.pivots} pivots, {len(self._rows)} rows kept")

    def _drive_out_artificials(self) -> None:
        n = self._n
        redundant = []
        for i in range(len(self._rows)):
            if self._basis[i] < n:
                continue
            col = min((c for c in self._rows[i] if c < n), default=None)
            if col is None:
                redundant.append(i)
            else:
                self._pivot(i, col)
        for i in reversed(redundant):
            del self._rows[i]
            del self._rhs[i]
            del self._basis[i]
        for row in self._rows:
            for col in [c for c in row if c >= n]:
                del row[col]
        self._obj = {}
        self._obj_rhs = Fraction(0)

    def _ensure_phase_one(self) -> None:
        if self._status is None:
            self._phase_one()

    def _point(self) -> tuple[Fraction, ...]:
        values = [Fraction(0)] * self._n
        for i, col in enumerate(self._basis):
            values[col] = self._rhs[i]
        return tuple(values)

    def _infeasible(self) -> LpOutcome:
        return LpOutcome(LpStatus.INFEASIBLE, certificate=self._certificate, pivots=self.pivots)

    # -- public API ---------------------------------------------------------

    def solve_feasibility(self) -> LpOutcome:
        self._ensure_phase_one()
        if self._status is LpStatus.INFEASIBLE:
            return self._infeasible()
        return LpOutcome(
            LpStatus.FEASIBLE,
            point=self._point(),
            basis=tuple(sorted(self._basis)),
            pivots=self.pivots,
        )

    def maximize(self, objective: Mapping[int, Number], allow_unbounded: bool = False) -> LpOutcome:
        """Maximize sum(objective[col] * x[col]) exactly.

        Raises:
            EncodingAnomaly: the objective is unbounded and allow_unbounded is False
        """
        self._ensure_phase_one()
        if self._status is LpStatus.INFEASIBLE:
            return self._infeasible()
        cost = {col: -Fraction(v) for col, v in objective.items() if v != 0}
        self._obj = dict(cost)
        self._obj_rhs = Fraction(0)
        for i, col in enumerate(self._basis):
            weight = cost.get(col)
            if weight:
                _axpy(self._obj, self._rows[i], -weight)
                self._obj_rhs -= weight * self._rhs[i]
        status = self._iterate(self._n)
        if status is LpStatus.UNBOUNDED:
            if not allow_unbounded:
                raise EncodingAnomaly(f"objective unbounded after {self.pivots} pivots")
            logger.warning("Objective unbounded")
            return LpOutcome(LpStatus.UNBOUNDED, pivots=self.pivots)
        return LpOutcome(
            LpStatus.FEASIBLE,
            point=self._point(),
            objective=self._obj_rhs,
            basis=tuple(sorted(self._basis)),
            pivots=self.pivots,
        )


def solve_feasibility(
    system: SparseMatrixSystem, pricing: Union[Pricing, str] = Pricing.BLAND
) -> LpOutcome:
    """Exact phase-I decision: a feasible point or a Farkas certificate."""
    return LpSolver(system, pricing).solve_feasibility()


def maximize(
    system: SparseMatrixSystem,
    objective: Mapping[int, Number],
    pricing: Union[Pricing, str] = Pricing.BLAND,
    allow_unbounded: bool = False,
) -> LpOutcome:
    return LpSolver(system, pricing).maximize(objective, allow_unbounded)
