"""Mode-dispatching entry points: exact rational or floating-point solving."""

from enum import Enum
from typing import Mapping, Union

from bayesarith.solver import floating, rank as exact_rank, simplex
from bayesarith.solver.simplex import LpOutcome, LpSolver, Number, Pricing
from bayesarith.solver.sparse import SparseMatrixSystem


class SolveMode(Enum):
    EXACT = "exact"
    FLOAT = "float"


def make_solver(
    system: SparseMatrixSystem,
    mode: Union[SolveMode, str] = SolveMode.EXACT,
    pricing: Union[Pricing, str] = Pricing.BLAND,
    tolerance: float = floating.DEFAULT_TOLERANCE,
) -> Union[LpSolver, floating.FloatLpSolver]:
    if SolveMode(mode) is SolveMode.FLOAT:
        return floating.FloatLpSolver(system, tolerance)
    return LpSolver(system, pricing)


def solve_feasibility(
    system: SparseMatrixSystem,
    mode: Union[SolveMode, str] = SolveMode.EXACT,
    pricing: Union[Pricing, str] = Pricing.BLAND,
    tolerance: float = floating.DEFAULT_TOLERANCE,
) -> LpOutcome:
    if SolveMode(mode) is SolveMode.FLOAT:
        return floating.solve_feasibility_float(system, tolerance)
    return simplex.solve_feasibility(system, pricing)


def maximize(
    system: SparseMatrixSystem,
    objective: Mapping[int, Number],
    mode: Union[SolveMode, str] = SolveMode.EXACT,
    pricing: Union[Pricing, str] = Pricing.BLAND,
    tolerance: float = floating.DEFAULT_TOLERANCE,
) -> LpOutcome:
    """Optimum of a linear objective; raises EncodingAnomaly when unbounded."""
    if SolveMode(mode) is SolveMode.FLOAT:
        return floating.maximize_float(system, objective, tolerance)
    return simplex.maximize(system, objective, pricing)


def rank(
    system: SparseMatrixSystem,
    mode: Union[SolveMode, str] = SolveMode.EXACT,
    dense_threshold: int = exact_rank.DEFAULT_DENSE_THRESHOLD,
) -> int:
    if SolveMode(mode) is SolveMode.FLOAT:
        return floating.rank_float(system)
    return exact_rank.rank(system, dense_threshold)
