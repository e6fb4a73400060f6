"""Floating-point counterparts of the exact solver, backed by scipy's HiGHS."""

import logging
from typing import Mapping

import numpy as np
from scipy.optimize import linprog

from bayesarith.core.errors import EncodingAnomaly
from bayesarith.solver.simplex import LpOutcome, LpStatus, Number
from bayesarith.solver.sparse import SparseMatrixSystem

logger = logging.getLogger("bayesarith")

DEFAULT_TOLERANCE = 1e-9

# scipy.optimize.linprog status codes
_OPTIMAL = 0
_INFEASIBLE = 2
_UNBOUNDED = 3


def _linprog(system: SparseMatrixSystem, cost: np.ndarray, tolerance: float):
    matrix, rhs = system.to_scipy()
    return linprog(
        cost,
        A_eq=matrix if system.n_rows else None,
        b_eq=rhs if system.n_rows else None,
        bounds=(0, None),
        method="highs",
        options={"primal_feasibility_tolerance": max(tolerance, 1e-10)},
    )


def _trivial(system: SparseMatrixSystem, tolerance: float) -> LpOutcome:
    if all(abs(float(b)) <= tolerance for b in system.rhs):
        return LpOutcome(LpStatus.FEASIBLE, point=(), objective=0.0, exact=False)
    return LpOutcome(LpStatus.INFEASIBLE, exact=False)


def solve_feasibility_float(
    system: SparseMatrixSystem, tolerance: float = DEFAULT_TOLERANCE
) -> LpOutcome:
    if system.n_cols == 0:
        return _trivial(system, tolerance)
    result = _linprog(system, np.zeros(system.n_cols), tolerance)
    if result.status == _INFEASIBLE:
        return LpOutcome(LpStatus.INFEASIBLE, exact=False)
    if result.status != _OPTIMAL:
        raise EncodingAnomaly(f"HiGHS stopped with status {result.status}: {result.message}")
    return LpOutcome(LpStatus.FEASIBLE, point=tuple(float(v) for v in result.x), exact=False)


def maximize_float(
    system: SparseMatrixSystem,
    objective: Mapping[int, Number],
    tolerance: float = DEFAULT_TOLERANCE,
    allow_unbounded: bool = False,
) -> LpOutcome:
    if system.n_cols == 0:
        return _trivial(system, tolerance)
    cost = np.zeros(system.n_cols)
    for col, value in objective.items():
        cost[col] = -float(value)
    result = _linprog(system, cost, tolerance)
    if result.status == _INFEASIBLE:
        return LpOutcome(LpStatus.INFEASIBLE, exact=False)
    if result.status == _UNBOUNDED:
        if not allow_unbounded:
            raise EncodingAnomaly("objective unbounded in float mode")
        return LpOutcome(LpStatus.UNBOUNDED, exact=False)
    if result.status != _OPTIMAL:
        raise EncodingAnomaly(f"HiGHS stopped with status {result.status}: {result.message}")
    return LpOutcome(
        LpStatus.FEASIBLE,
        point=tuple(float(v) for v in result.x),
        objective=float(-result.fun),
        exact=False,
    )


def rank_float(system: SparseMatrixSystem) -> int:
    if not system.rows or system.n_cols == 0:
        return 0
    matrix, _ = system.to_scipy()
    return int(np.linalg.matrix_rank(matrix.toarray()))


class FloatLpSolver:
    """Same interface as LpSolver; every call is an independent HiGHS solve."""

    def __init__(self, system: SparseMatrixSystem, tolerance: float = DEFAULT_TOLERANCE):
        self.system = system
        self.tolerance = tolerance
        self.pivots = 0

    def solve_feasibility(self) -> LpOutcome:
        return solve_feasibility_float(self.system, self.tolerance)

    def maximize(self, objective: Mapping[int, Number], allow_unbounded: bool = False) -> LpOutcome:
        return maximize_float(self.system, objective, self.tolerance, allow_unbounded)
