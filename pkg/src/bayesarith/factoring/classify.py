"""Determinism and separability of feasible points."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from bayesarith.core.models import Number, Requirement
from bayesarith.core.system import LpSystem


@dataclass(frozen=True)
class SeparabilityViolation:
    requirement: Requirement
    value: Fraction
    product: Fraction

    def __str__(self) -> str:
        return f"P{self.requirement} = {self.value}, product of singletons = {self.product}"


@dataclass
class DeterminismReport:
    """Singleton values of a point and where it fails to factor into them."""

    singletons: dict[Requirement, Fraction] = field(default_factory=dict)
    integral: bool = True
    violations: list[SeparabilityViolation] = field(default_factory=list)

    @property
    def separable(self) -> bool:
        return not self.violations

    @property
    def deterministic(self) -> bool:
        return self.integral and self.separable

    def bits(self) -> dict[int, int]:
        """Variable values of an integral point, read from positive singletons."""
        if not self.integral:
            raise ValueError("point is not integral")
        values = {}
        for req, value in self.singletons.items():
            (lit,) = req.literals
            values[abs(lit)] = int(value) if lit > 0 else 1 - int(value)
        return values


def _literal_value(lit: int, point: Mapping[Requirement, Fraction]) -> Fraction:
    single = Requirement((lit,))
    if single in point:
        return point[single]
    return 1 - point[Requirement((-lit,))]


def classify_solution(point: Mapping[Requirement, Number], lp: LpSystem) -> DeterminismReport:
    """Check integrality of singletons and P(k1;k2;..) = P(k1) x P(k2) x .. elsewhere."""
    exact = {req: Fraction(point[req]) for req in lp.unknowns}
    report = DeterminismReport()
    for req in lp.unknowns:
        if req.arity == 1:
            value = exact[req]
            report.singletons[req] = value
            if value not in (0, 1):
                report.integral = False
    for req in lp.unknowns:
        if req.arity == 1:
            continue
        product = Fraction(1)
        for lit in req.literals:
            product *= _literal_value(lit, exact)
        if product != exact[req]:
            report.violations.append(SeparabilityViolation(req, exact[req], product))
    return report
