"""Exception hierarchy for encoding, solving and reporting failures."""

from typing import Any, Optional


class BayesArithError(Exception):
    """Base class for all errors raised by bayesarith."""


class RequirementError(BayesArithError, ValueError):
    """A requirement could not be formed from the given literals."""


class DuplicateVariable(RequirementError):
    """The same variable index appears twice in one requirement."""

    def __init__(self, index: int) -> None:
        super().__init__(f"variable {index} appears more than once")
        self.index = index


class ArityError(RequirementError):
    """A requirement has fewer than one or more than three literals."""

    def __init__(self, arity: int) -> None:
        super().__init__(f"requirement arity must be 1..3, got {arity}")
        self.arity = arity


class PolarityError(RequirementError):
    """A negated literal was used where only positive literals are allowed."""


class RangeError(BayesArithError, ValueError):
    """A numeric argument is outside the range its encoder accepts."""


class ContradictoryData(BayesArithError, ValueError):
    """Two data constraints fix the same variable to different values."""

    def __init__(self, index: int) -> None:
        super().__init__(f"variable {index} is fixed to both 0 and 1")
        self.index = index


class UnknownRequirement(BayesArithError, KeyError):
    """A requirement is not registered in the unknown table of a system."""

    def __str__(self) -> str:
        return f"requirement {self.args[0]} is not an unknown of this system"


class ProvedInfeasible(BayesArithError):
    """Presolve derived a contradiction; the system has no feasible point.

    ``constraint`` is the offending constraint (or a description of the
    conflicting fixings) and ``trace`` holds the fixings made so far.
    """

    def __init__(self, reason: str, constraint: Any = None, trace: Any = None) -> None:
        super().__init__(reason)
        self.reason = reason
        self.constraint = constraint
        self.trace = trace


class EncodingAnomaly(BayesArithError):
    """An LP over probabilities turned out unbounded, which a correct encoding never is."""


class TooLarge(BayesArithError):
    """A request exceeds a configured size limit."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what} of size {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


class FormatError(BayesArithError, ValueError):
    """A text file could not be parsed as an LP system."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}{message}")
        self.line_number = line_number


class UsageError(BayesArithError):
    """Command line arguments are malformed."""
