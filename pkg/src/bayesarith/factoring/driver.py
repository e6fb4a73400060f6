"""Bit-by-bit factoring driver.

The factoring system of C is presolved, then the bits of B are fixed one at
a time. At step t the driver maximizes

    P(l_0) + ... + P(l_{t-1}) + P(+-B_t)

for both polarities of B_t, where l_0..l_{t-1} are the literals already
chosen. A polarity is feasible for the relaxation exactly when its maximum
reaches t+1. When neither does, C is reported prime by procedure.
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from bayesarith.config.settings import Settings
from bayesarith.core.errors import EncodingAnomaly, ProvedInfeasible
from bayesarith.core.labeling import factor_index
from bayesarith.core.models import LinearConstraint, Requirement, RoleKind, SolveStats, VariableRole
from bayesarith.core.system import LpSystem
from bayesarith.encoder.multiplication import FactoringSpec, build_factoring
from bayesarith.report.schemas import SweepRow
from bayesarith.solver.lp import SolveMode, make_solver
from bayesarith.solver.presolve import PresolveTrace, presolve
from bayesarith.solver.sparse import SparseMatrixSystem

logger = logging.getLogger("bayesarith")

Number = Union[Fraction, float]


class FactorStatus(Enum):
    COMPOSITE = "composite"
    PRIME_BY_PROCEDURE = "prime-by-procedure"
    INFEASIBLE_SYSTEM = "infeasible-system"
    DISCREPANCY = "discrepancy"


@dataclass(frozen=True)
class BitDecision:
    """One maximization of the bit-fixing loop."""

    bit: int
    polarity: int
    objective: str
    optimum: Number
    target: int
    reached: bool
    chosen: bool = False


@dataclass
class FactorResult:
    value: int
    status: FactorStatus
    a: Optional[int] = None
    b: Optional[int] = None
    detail: str = ""
    decisions: list[BitDecision] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)
    trace: Optional[PresolveTrace] = None

    @property
    def is_composite(self) -> bool:
        return self.status is FactorStatus.COMPOSITE

    def describe(self) -> str:
        if self.status is FactorStatus.COMPOSITE:
            return f"Composite {self.a}×{self.b}"
        if self.status is FactorStatus.PRIME_BY_PROCEDURE:
            return "PrimeByProcedure"
        if self.status is FactorStatus.INFEASIBLE_SYSTEM:
            return "InfeasibleSystem"
        return f"Discrepancy: {self.detail}"

    def to_record(self, include_trace: bool = False) -> SweepRow:
        trace = self.trace.as_records() if include_trace and self.trace is not None else None
        return SweepRow(
            C=self.value,
            status=self.status.value,
            A=self.a,
            B=self.b,
            objectives_evaluated=self.stats.objectives,
            lp_dims=(self.stats.unknowns, self.stats.equations),
            reduced_dims=(self.stats.reduced_unknowns, self.stats.reduced_equations),
            presolve_fixed_count=self.stats.fixed_by_presolve,
            pivots=self.stats.pivots,
            wall_time=round(self.stats.seconds, 6),
            detail=self.detail,
            presolve_trace=trace,
        )


class _BitSearch:
    """Objective construction and branch exploration over a (reduced) system."""

    def __init__(
        self,
        spec: FactoringSpec,
        reduced: LpSystem,
        trace: PresolveTrace,
        settings: Settings,
        result: FactorResult,
    ) -> None:
        self.spec = spec
        self.reduced = reduced
        self.trace = trace
        self.settings = settings
        self.result = result
        self.solver = make_solver(
            SparseMatrixSystem.from_lp(reduced),
            settings.mode,
            settings.pricing,
            settings.float_tolerance,
        )
        self.exact = SolveMode(settings.mode) is SolveMode.EXACT
        self.order = (settings.prefer_bit, 1 - settings.prefer_bit)
        self.invalid_leaves: list[str] = []

    def literal(self, t: int, polarity: int) -> int:
        index = factor_index(VariableRole(RoleKind.B, t), self.spec.n, self.spec.m)
        return index if polarity else -index

    def objective(self, literals: list[int]) -> tuple[dict[int, Fraction], Fraction]:
        """Column coefficients and constant part of sum P(literal)."""
        coefficients: dict[int, Fraction] = {}
        constant = Fraction(0)
        for lit in literals:
            req = Requirement((lit,))
            if req in self.trace.fixed:
                constant += self.trace.fixed[req]
                continue
            col = self.reduced.column(self.trace.substitutions.get(req, req))
            coefficients[col] = coefficients.get(col, Fraction(0)) + 1
        return coefficients, constant

    def reaches(self, optimum: Number, target: int) -> bool:
        if self.exact:
            return optimum == target
        return abs(float(optimum) - target) <= self.settings.float_tolerance

    def step(self, t: int, prefix: list[int]) -> list[int]:
        """Maximize both polarities of bit t; return the polarities that reach t+1."""
        reached = []
        for polarity in self.order:
            literals = prefix + [self.literal(t, polarity)]
            coefficients, constant = self.objective(literals)
            outcome = self.solver.maximize(coefficients)
            self.result.stats.objectives += 1
            if outcome.objective is None:
                raise EncodingAnomaly(
                    f"maximizing bit {t} returned {outcome.status.value} after phase I succeeded"
                )
            if self.exact:
                optimum = outcome.objective + constant
            else:
                optimum = float(outcome.objective) + float(constant)
            ok = self.reaches(optimum, t + 1)
            text = " + ".join(f"P({lit})" for lit in literals)
            self.result.decisions.append(BitDecision(t, polarity, text, optimum, t + 1, ok))
            logger.debug(f"C={self.spec.value} bit {t}: max {text} = {optimum} (target {t + 1})")
            if ok:
                reached.append(polarity)
        return reached

    def mark_chosen(self, t: int, polarity: int) -> None:
        for i in range(len(self.result.decisions) - 1, -1, -1):
            decision = self.result.decisions[i]
            if decision.bit == t and decision.polarity == polarity:
                self.result.decisions[i] = BitDecision(
                    decision.bit,
                    decision.polarity,
                    decision.objective,
                    decision.optimum,
                    decision.target,
                    decision.reached,
                    chosen=True,
                )
                return

    def leaf(self, bits: list[int]) -> Optional[int]:
        b = sum(bit << t for t, bit in enumerate(bits))
        value = self.spec.value
        if b <= 1:
            self.invalid_leaves.append(f"bit fixing ended with trivial B={b}")
        elif value % b:
            self.invalid_leaves.append(f"B={b} does not divide C={value}")
        elif not 1 < value // b < 2**self.spec.n:
            self.invalid_leaves.append(f"A={value // b} violates the width of A")
        else:
            return b
        return None

    def search(self, t: int, bits: list[int], prefix: list[int]) -> tuple[Optional[int], bool]:
        """Depth-first over bit choices; returns (B or None, whether any leaf was reached)."""
        if t == self.spec.m:
            return self.leaf(bits), True
        reached = self.step(t, prefix)
        if not self.settings.exhaustive:
            reached = reached[:1]
        any_leaf = False
        for polarity in reached:
            self.mark_chosen(t, polarity)
            found, leaf_reached = self.search(
                t + 1, bits + [polarity], prefix + [self.literal(t, polarity)]
            )
            any_leaf = any_leaf or leaf_reached
            if found is not None:
                return found, True
        return None, any_leaf


def factor(
    value: int,
    settings: Optional[Settings] = None,
    extra_constraints: Iterable[LinearConstraint] = (),
) -> FactorResult:
    """Run the bit-fixing procedure on C = value (> 3).

    Composite results are re-multiplied before they are returned, so a
    Composite(A, B) always satisfies A * B = C.
    """
    settings = settings or Settings()
    started = time.perf_counter()
    spec = FactoringSpec(value)
    result = FactorResult(value, FactorStatus.DISCREPANCY)
    lp = build_factoring(spec, extra_constraints)
    result.stats.unknowns = lp.n_unknowns
    result.stats.equations = lp.n_equations

    try:
        if settings.presolve:
            reduced, trace = presolve(lp)
        else:
            reduced, trace = lp, PresolveTrace(lp.unknowns)
    except ProvedInfeasible as e:
        result.status = FactorStatus.INFEASIBLE_SYSTEM
        result.trace = e.trace
        result.detail = f"presolve: {e.reason}"
        return _finish(result, started)
    result.stats.reduced_unknowns = reduced.n_unknowns
    result.stats.reduced_equations = reduced.n_equations
    result.stats.fixed_by_presolve = len(trace.fixed)
    result.trace = trace

    search = _BitSearch(spec, reduced, trace, settings, result)
    try:
        if not search.solver.solve_feasibility().is_feasible:
            result.status = FactorStatus.INFEASIBLE_SYSTEM
            result.detail = "phase I infeasible"
            return _finish(result, started, search)
        b, any_leaf = search.search(0, [], [])
    except EncodingAnomaly as e:
        result.status = FactorStatus.DISCREPANCY
        result.detail = f"encoding anomaly: {e}"
        logger.warning(f"C={value}: {result.detail}")
        return _finish(result, started, search)

    if b is not None:
        a = value // b
        if a * b != value:
            raise AssertionError(f"re-multiplication failed for C={value}: {a}*{b}")
        result.status = FactorStatus.COMPOSITE
        result.a, result.b = a, b
    elif any_leaf:
        result.status = FactorStatus.DISCREPANCY
        result.detail = "; ".join(search.invalid_leaves)
        logger.warning(f"C={value}: {result.detail}")
    else:
        result.status = FactorStatus.PRIME_BY_PROCEDURE
    return _finish(result, started, search)


def _finish(
    result: FactorResult, started: float, search: Optional[_BitSearch] = None
) -> FactorResult:
    if search is not None:
        result.stats.pivots = search.solver.pivots
    result.stats.seconds = time.perf_counter() - started
    logger.info(
        f"C={result.value}: {result.describe()} "
        f"({result.stats.objectives} objectives, {result.stats.seconds:.3f}s)"
    )
    return result
