"""LP systems over partial probabilities."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from bayesarith.core.errors import UnknownRequirement
from bayesarith.core.models import (
    ConstraintKind,
    Environment,
    LinearConstraint,
    Number,
    Requirement,
)


@dataclass(frozen=True)
class SystemCounts:
    """Sizes of an LP system broken down by origin."""

    unknowns: int
    positive: int
    data: int
    structural: int
    universal: int
    extra: int = 0

    @property
    def equations(self) -> int:
        return self.data + self.structural + self.universal + self.extra

    def as_dict(self) -> dict[str, int]:
        return {
            "unknowns": self.unknowns,
            "positive": self.positive,
            "equations": self.equations,
            "data": self.data,
            "structural": self.structural,
            "universal": self.universal,
            "extra": self.extra,
        }


@dataclass(frozen=True)
class LpSystem:
    """Equations A x = b with x >= 0, one column per registered requirement.

    ``unknowns`` fixes the column order; column ``j`` of the sparse matrix
    is ``unknowns[j]``. Every requirement used by a constraint must be
    registered. ``positives`` lists the all-positive generators the unknown
    table was closed over (empty after presolve).
    """

    env: Environment
    unknowns: tuple[Requirement, ...]
    constraints: tuple[LinearConstraint, ...]
    positives: tuple[Requirement, ...] = field(default=(), compare=False)
    _index: dict[Requirement, int] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        index = {req: col for col, req in enumerate(self.unknowns)}
        if len(index) != len(self.unknowns):
            raise ValueError("unknown table lists a requirement twice")
        object.__setattr__(self, "_index", index)
        for constraint in self.constraints:
            for req in constraint.requirements:
                if req not in index:
                    raise UnknownRequirement(req)

    def __contains__(self, req: Requirement) -> bool:
        return req in self._index

    def column(self, req: Requirement) -> int:
        """Column of a requirement; raises UnknownRequirement if absent."""
        try:
            return self._index[req]
        except KeyError:
            raise UnknownRequirement(req) from None

    @property
    def n_unknowns(self) -> int:
        return len(self.unknowns)

    @property
    def n_equations(self) -> int:
        return len(self.constraints)

    def of_kind(self, kind: ConstraintKind) -> list[LinearConstraint]:
        return [c for c in self.constraints if c.kind is kind]

    def counts(self) -> SystemCounts:
        tally = {kind: 0 for kind in ConstraintKind}
        for constraint in self.constraints:
            tally[constraint.kind] += 1
        return SystemCounts(
            unknowns=self.n_unknowns,
            positive=len(self.positives),
            data=tally[ConstraintKind.DATA],
            structural=tally[ConstraintKind.STRUCTURAL],
            universal=tally[ConstraintKind.UNIVERSAL],
            extra=tally[ConstraintKind.EXTRA],
        )

    def point_from_vector(self, values: Sequence[Number]) -> dict[Requirement, Number]:
        if len(values) != len(self.unknowns):
            raise ValueError(f"expected {len(self.unknowns)} values, got {len(values)}")
        return dict(zip(self.unknowns, values))

    def violations(
        self, point: Mapping[Requirement, Number], tolerance: Optional[float] = None
    ) -> list[LinearConstraint]:
        """Constraints not satisfied by ``point``; exact unless a tolerance is given."""
        broken = []
        for constraint in self.constraints:
            lhs = constraint.lhs(point)
            if tolerance is None:
                ok = lhs == constraint.rhs
            else:
                ok = abs(float(lhs) - float(constraint.rhs)) <= tolerance
            if not ok:
                broken.append(constraint)
        return broken

    def is_satisfied(self, point: Mapping[Requirement, Number]) -> bool:
        """True when the point is nonnegative and satisfies every equation exactly."""
        if any(Fraction(point[req]) < 0 for req in self.unknowns):
            return False
        return not self.violations(point)
