"""Core domain models - immutable value types with no I/O dependencies."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional, Union

from bayesarith.core.errors import ArityError, DuplicateVariable, RangeError, RequirementError

# Coefficients and right-hand sides are integers in fresh encodings and
# Fractions once presolve has substituted values.
Number = Union[int, Fraction]

# A requirement in raw form: signed literals ordered by absolute index.
RawLiterals = tuple[int, ...]

MAX_ARITY = 3


@dataclass(frozen=True, order=True)
class Literal:
    """A Boolean variable index with a polarity."""

    index: int
    positive: bool = True

    def __post_init__(self) -> None:
        if self.index < 1:
            raise RangeError(f"variable index must be >= 1, got {self.index}")

    @classmethod
    def from_signed(cls, value: int) -> "Literal":
        if value == 0:
            raise RangeError("0 is not a literal")
        return cls(abs(value), value > 0)

    @property
    def signed(self) -> int:
        return self.index if self.positive else -self.index

    def negate(self) -> "Literal":
        return Literal(self.index, not self.positive)

    def __str__(self) -> str:
        return str(self.signed)


@dataclass(frozen=True, order=True)
class Requirement:
    """A conjunction of one to three literals over distinct variables.

    Literals are stored as signed ints sorted by absolute index, so two
    requirements naming the same conjunction compare equal. Ordering is
    lexicographic on that tuple.
    """

    literals: RawLiterals

    def __post_init__(self) -> None:
        arity = len(self.literals)
        if not 1 <= arity <= MAX_ARITY:
            raise ArityError(arity)
        previous = 0
        for lit in self.literals:
            index = abs(lit)
            if index == 0:
                raise RangeError("0 is not a literal")
            if index == previous:
                raise DuplicateVariable(index)
            if index < previous:
                raise RequirementError(f"literals not in canonical order: {self.literals}")
            previous = index

    @property
    def arity(self) -> int:
        return len(self.literals)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(abs(lit) for lit in self.literals)

    @property
    def is_positive(self) -> bool:
        return all(lit > 0 for lit in self.literals)

    def positive(self) -> "Requirement":
        """The all-positive requirement over the same variables."""
        return Requirement(self.indices)

    def without(self, literal: int) -> Optional["Requirement"]:
        """Drop one literal; None when nothing is left."""
        rest = tuple(lit for lit in self.literals if lit != literal)
        if len(rest) == len(self.literals):
            raise RequirementError(f"{literal} is not part of {self}")
        return Requirement(rest) if rest else None

    def evaluate(self, assignment: Mapping[int, int]) -> int:
        """Indicator of this conjunction under a 0/1 assignment of indices."""
        for lit in self.literals:
            bit = assignment[abs(lit)]
            if (lit > 0) != (bit == 1):
                return 0
        return 1

    def __str__(self) -> str:
        return "(" + ";".join(str(lit) for lit in self.literals) + ")"


class ConstraintKind(Enum):
    """Where an equation of an LP system came from."""

    DATA = "data"  # fixes an input or output bit
    STRUCTURAL = "structural"  # gate logic
    UNIVERSAL = "universal"  # marginalization and normalization
    EXTRA = "extra"  # added by a caller (sampled or fixed objectives)


@dataclass(frozen=True)
class LinearConstraint:
    """An equation sum(coef * P(requirement)) = rhs."""

    terms: tuple[tuple[Requirement, Number], ...]
    rhs: Number
    kind: ConstraintKind
    label: str = ""

    @classmethod
    def from_raw(
        cls,
        terms: tuple[tuple[RawLiterals, int], ...],
        rhs: Number,
        kind: ConstraintKind,
        label: str = "",
    ) -> "LinearConstraint":
        return cls(tuple((Requirement(lits), coef) for lits, coef in terms), rhs, kind, label)

    @property
    def requirements(self) -> tuple[Requirement, ...]:
        return tuple(req for req, _ in self.terms)

    @property
    def nnz(self) -> int:
        return len(self.terms)

    def lhs(self, point: Mapping[Requirement, Number]) -> Number:
        return sum((coef * point[req] for req, coef in self.terms), Fraction(0))

    def is_satisfied(self, point: Mapping[Requirement, Number]) -> bool:
        return self.lhs(point) == self.rhs

    def __str__(self) -> str:
        parts: list[str] = []
        for i, (req, coef) in enumerate(self.terms):
            magnitude = abs(coef)
            body = f"P{req}" if magnitude == 1 else f"{magnitude}*P{req}"
            if i == 0:
                parts.append(f"-{body}" if coef < 0 else body)
            else:
                parts.append(f"- {body}" if coef < 0 else f"+ {body}")
        lhs = " ".join(parts) if parts else "0"
        return f"{lhs} = {self.rhs}"


class EnvironmentKind(Enum):
    """Which circuit an LP system encodes."""

    ADDITION = "addition"
    SHIFTED = "shifted"
    MULTIPLICATION = "multiplication"


@dataclass(frozen=True)
class Environment:
    """Circuit family plus its widths.

    ``n`` is the width of the first operand (addition and multiplicand),
    ``m`` the width of the multiplier.
    """

    kind: EnvironmentKind
    n: int
    m: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise RangeError(f"width n must be >= 1, got {self.n}")
        if self.kind is EnvironmentKind.ADDITION:
            if self.m is not None:
                raise RangeError("addition takes a single width")
        elif self.m is None or self.m < 2 or self.n < 2:
            raise RangeError(f"{self.kind.value} needs n >= 2 and m >= 2")

    @property
    def variable_count(self) -> int:
        """Number of Boolean variables, indices 1..variable_count."""
        if self.kind is EnvironmentKind.ADDITION:
            return 4 * self.n
        if self.kind is EnvironmentKind.SHIFTED:
            return 3 * self.n * self.m - 2 * self.n
        return 3 * self.n * self.m - self.n + self.m

    def __str__(self) -> str:
        if self.m is None:
            return f"{self.kind.value}(n={self.n})"
        return f"{self.kind.value}(n={self.n}, m={self.m})"


class RoleKind(Enum):
    """Circuit bit families."""

    U = "U"  # addend, or partial-product row when t is set
    V = "V"  # second addend
    S = "S"  # sum bit (running sum when t is set)
    R = "R"  # carry bit
    A = "A"  # multiplicand bit
    B = "B"  # multiplier bit
    C = "C"  # product bit


@dataclass(frozen=True)
class VariableRole:
    """A named circuit bit: kind, bit position and optional step."""

    kind: RoleKind
    i: int
    t: Optional[int] = None

    def __str__(self) -> str:
        if self.t is None:
            return f"{self.kind.value}_{self.i}"
        return f"{self.kind.value}_{self.t},{self.i}"


@dataclass
class SolveStats:
    """Counters gathered while solving one system."""

    unknowns: int = 0
    equations: int = 0
    reduced_unknowns: int = 0
    reduced_equations: int = 0
    fixed_by_presolve: int = 0
    pivots: int = 0
    objectives: int = 0
    seconds: float = 0.0
    extra: dict[str, float] = field(default_factory=dict)
