"""Canonical forms, sign variants and parsing of requirements."""

from itertools import combinations, product
from typing import Iterable, Union

from bayesarith.core.errors import ArityError, DuplicateVariable, RequirementError
from bayesarith.core.models import MAX_ARITY, Literal, RawLiterals, Requirement
from bayesarith.parser.patterns import REQUIREMENT_PATTERN


def canonical_literals(literals: Iterable[Union[Literal, int]]) -> RawLiterals:
    """Sort signed literals by index, rejecting repeats and bad arity."""
    signed = [lit.signed if isinstance(lit, Literal) else int(lit) for lit in literals]
    if not 1 <= len(signed) <= MAX_ARITY:
        raise ArityError(len(signed))
    if any(lit == 0 for lit in signed):
        raise RequirementError("0 is not a literal")
    signed.sort(key=abs)
    for left, right in zip(signed, signed[1:]):
        if abs(left) == abs(right):
            raise DuplicateVariable(abs(left))
    return tuple(signed)


def canonicalize(literals: Iterable[Union[Literal, int]]) -> Requirement:
    """Build the canonical requirement for a set of literals.

    Raises:
        DuplicateVariable: an index appears twice, with either polarity
        ArityError: fewer than one or more than three literals
    """
    return Requirement(canonical_literals(literals))


def sign_patterns(indices: RawLiterals) -> list[RawLiterals]:
    """All polarity assignments over ascending indices, ++ first, -- last."""
    return [
        tuple(index if positive else -index for index, positive in zip(indices, signs))
        for signs in product((True, False), repeat=len(indices))
    ]


def raw_variants(positive: RawLiterals) -> list[RawLiterals]:
    """Sign variants of a positive literal tuple and of all its sub-tuples."""
    found: set[RawLiterals] = set()
    for size in range(1, len(positive) + 1):
        for subset in combinations(positive, size):
            found.update(sign_patterns(subset))
    return sorted(found, key=lambda lits: (len(lits), lits))


def variants(requirement: Requirement) -> list[Requirement]:
    """Every sign variant of a requirement and of its sub-requirements.

    Polarities of the input are ignored: (-2;7) and (2;7) give the same 8
    requirements. A singleton gives 2, a pair 8 and a triple 26. The result is
    ordered singletons first, then pairs, then triples.
    """
    return [Requirement(lits) for lits in raw_variants(requirement.positive().literals)]


def parse_requirement(text: str) -> Requirement:
    """Parse the display form, e.g. ``(-2;3)``, back into a requirement."""
    match = REQUIREMENT_PATTERN.match(text)
    if not match:
        raise RequirementError(f"not a requirement: {text!r}")
    literals = [
        int(part.strip().replace("−", "-")) for part in match.group("literals").split(";")
    ]
    return canonicalize(literals)
